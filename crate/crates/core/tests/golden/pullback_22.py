# generated-by: torelli 0.1.0 input-sha256:a75ee349e7be2470b199d4648b0c3656915d76339e6a936195c6dc38ab5c6c19
from admcycles import *
from sage.all import QQ

g, n = 4, 0
expr = TautologicalRing(4, 0).zero()
expr += QQ('-3/2') * StableGraph([0, 1, 1, 1, 1], [[1, 3, 5, 7], [2], [4], [6], [8]], [(1, 2), (3, 4), (5, 6), (7, 8)]).boundary_pushforward([fundclass(0, 4), fundclass(1, 1), fundclass(1, 1), fundclass(1, 1), fundclass(1, 1)])
expr += QQ('-3') * StableGraph([0, 1, 1, 1, 1], [[1, 3, 5], [2], [4], [6, 7], [8]], [(1, 2), (3, 4), (5, 6), (7, 8)]).boundary_pushforward([fundclass(0, 3), fundclass(1, 1), fundclass(1, 1), fundclass(1, 2), fundclass(1, 1)])
expr += QQ('-3') * StableGraph([0, 1, 1, 1, 1], [[1, 3, 7], [2], [4, 5], [6], [8]], [(1, 2), (3, 4), (5, 6), (7, 8)]).boundary_pushforward([fundclass(0, 3), fundclass(1, 1), fundclass(1, 2), fundclass(1, 1), fundclass(1, 1)])
expr += QQ('-4') * StableGraph([0, 1, 1, 2], [[1, 3, 5], [2], [4], [6]], [(1, 2), (3, 4), (5, 6)]).boundary_pushforward([fundclass(0, 3), psiclass(1, 1, 1), fundclass(1, 1), fundclass(2, 1)])
expr += QQ('-4') * StableGraph([0, 1, 1, 2], [[1, 3, 5], [2], [4], [6]], [(1, 2), (3, 4), (5, 6)]).boundary_pushforward([fundclass(0, 3), fundclass(1, 1), psiclass(1, 1, 1), fundclass(2, 1)])
expr += QQ('-6') * StableGraph([0, 1, 1, 2], [[1, 3, 5], [2], [4], [6]], [(1, 2), (3, 4), (5, 6)]).boundary_pushforward([fundclass(0, 3), fundclass(1, 1), fundclass(1, 1), psiclass(1, 2, 1)])
expr += QQ('6') * StableGraph([0, 1, 1, 2], [[1, 3, 5], [2], [4], [6]], [(1, 2), (3, 4), (5, 6)]).boundary_pushforward([fundclass(0, 3), lambdaclass(1, 1, 1), fundclass(1, 1), fundclass(2, 1)])
expr += QQ('6') * StableGraph([0, 1, 1, 2], [[1, 3, 5], [2], [4], [6]], [(1, 2), (3, 4), (5, 6)]).boundary_pushforward([fundclass(0, 3), fundclass(1, 1), lambdaclass(1, 1, 1), fundclass(2, 1)])
expr += QQ('6') * StableGraph([0, 1, 1, 2], [[1, 3, 5], [2], [4], [6]], [(1, 2), (3, 4), (5, 6)]).boundary_pushforward([fundclass(0, 3), fundclass(1, 1), fundclass(1, 1), lambdaclass(1, 2, 1)])
expr += QQ('1') * StableGraph([1, 1, 1, 1], [[1, 3], [2], [4, 5], [6]], [(1, 2), (3, 4), (5, 6)]).boundary_pushforward([psiclass(1, 1, 2), fundclass(1, 1), fundclass(1, 2), fundclass(1, 1)])
expr += QQ('1') * StableGraph([1, 1, 1, 1], [[1, 3], [2], [4, 5], [6]], [(1, 2), (3, 4), (5, 6)]).boundary_pushforward([fundclass(1, 2), psiclass(1, 1, 1), fundclass(1, 2), fundclass(1, 1)])
expr += QQ('1') * StableGraph([1, 1, 1, 1], [[1, 3], [2], [4, 5], [6]], [(1, 2), (3, 4), (5, 6)]).boundary_pushforward([psiclass(2, 1, 2), fundclass(1, 1), fundclass(1, 2), fundclass(1, 1)])
expr += QQ('1') * StableGraph([1, 1, 1, 1], [[1, 3], [2], [4, 5], [6]], [(1, 2), (3, 4), (5, 6)]).boundary_pushforward([fundclass(1, 2), fundclass(1, 1), psiclass(1, 1, 2), fundclass(1, 1)])
expr += QQ('1') * StableGraph([1, 1, 1, 1], [[1, 3], [2], [4, 5], [6]], [(1, 2), (3, 4), (5, 6)]).boundary_pushforward([fundclass(1, 2), fundclass(1, 1), psiclass(2, 1, 2), fundclass(1, 1)])
expr += QQ('1') * StableGraph([1, 1, 1, 1], [[1, 3], [2], [4, 5], [6]], [(1, 2), (3, 4), (5, 6)]).boundary_pushforward([fundclass(1, 2), fundclass(1, 1), fundclass(1, 2), psiclass(1, 1, 1)])
expr += QQ('-2') * StableGraph([1, 1, 1, 1], [[1, 3], [2], [4, 5], [6]], [(1, 2), (3, 4), (5, 6)]).boundary_pushforward([lambdaclass(1, 1, 2), fundclass(1, 1), fundclass(1, 2), fundclass(1, 1)])
expr += QQ('-2') * StableGraph([1, 1, 1, 1], [[1, 3], [2], [4, 5], [6]], [(1, 2), (3, 4), (5, 6)]).boundary_pushforward([fundclass(1, 2), lambdaclass(1, 1, 1), fundclass(1, 2), fundclass(1, 1)])
expr += QQ('-2') * StableGraph([1, 1, 1, 1], [[1, 3], [2], [4, 5], [6]], [(1, 2), (3, 4), (5, 6)]).boundary_pushforward([fundclass(1, 2), fundclass(1, 1), lambdaclass(1, 1, 2), fundclass(1, 1)])
expr += QQ('-2') * StableGraph([1, 1, 1, 1], [[1, 3], [2], [4, 5], [6]], [(1, 2), (3, 4), (5, 6)]).boundary_pushforward([fundclass(1, 2), fundclass(1, 1), fundclass(1, 2), lambdaclass(1, 1, 1)])
expr += QQ('2') * StableGraph([2, 1, 1], [[1, 3], [2], [4]], [(1, 2), (3, 4)]).boundary_pushforward([psiclass(1, 2, 2), psiclass(1, 1, 1), fundclass(1, 1)])
expr += QQ('1') * StableGraph([2, 1, 1], [[1, 3], [2], [4]], [(1, 2), (3, 4)]).boundary_pushforward([psiclass(1, 2, 2)*psiclass(2, 2, 2), fundclass(1, 1), fundclass(1, 1)])
expr += QQ('1') * StableGraph([2, 1, 1], [[1, 3], [2], [4]], [(1, 2), (3, 4)]).boundary_pushforward([psiclass(1, 2, 2), fundclass(1, 1), psiclass(1, 1, 1)])
expr += QQ('-2') * StableGraph([2, 1, 1], [[1, 3], [2], [4]], [(1, 2), (3, 4)]).boundary_pushforward([psiclass(1, 2, 2)*lambdaclass(1, 2, 2), fundclass(1, 1), fundclass(1, 1)])
expr += QQ('-2') * StableGraph([2, 1, 1], [[1, 3], [2], [4]], [(1, 2), (3, 4)]).boundary_pushforward([psiclass(1, 2, 2), lambdaclass(1, 1, 1), fundclass(1, 1)])
expr += QQ('-2') * StableGraph([2, 1, 1], [[1, 3], [2], [4]], [(1, 2), (3, 4)]).boundary_pushforward([psiclass(1, 2, 2), fundclass(1, 1), lambdaclass(1, 1, 1)])
expr += QQ('1') * StableGraph([2, 1, 1], [[1, 3], [2], [4]], [(1, 2), (3, 4)]).boundary_pushforward([psiclass(1, 2, 2)**2, fundclass(1, 1), fundclass(1, 1)])
expr += QQ('1') * StableGraph([2, 1, 1], [[1, 3], [2], [4]], [(1, 2), (3, 4)]).boundary_pushforward([psiclass(2, 2, 2), psiclass(1, 1, 1), fundclass(1, 1)])
expr += QQ('1') * StableGraph([2, 1, 1], [[1, 3], [2], [4]], [(1, 2), (3, 4)]).boundary_pushforward([fundclass(2, 2), psiclass(1, 1, 1), psiclass(1, 1, 1)])
expr += QQ('-2') * StableGraph([2, 1, 1], [[1, 3], [2], [4]], [(1, 2), (3, 4)]).boundary_pushforward([lambdaclass(1, 2, 2), psiclass(1, 1, 1), fundclass(1, 1)])
expr += QQ('-2') * StableGraph([2, 1, 1], [[1, 3], [2], [4]], [(1, 2), (3, 4)]).boundary_pushforward([fundclass(2, 2), psiclass(1, 1, 1), lambdaclass(1, 1, 1)])
expr += QQ('2') * StableGraph([2, 1, 1], [[1, 3], [2], [4]], [(1, 2), (3, 4)]).boundary_pushforward([psiclass(2, 2, 2), fundclass(1, 1), psiclass(1, 1, 1)])
expr += QQ('-2') * StableGraph([2, 1, 1], [[1, 3], [2], [4]], [(1, 2), (3, 4)]).boundary_pushforward([psiclass(2, 2, 2)*lambdaclass(1, 2, 2), fundclass(1, 1), fundclass(1, 1)])
expr += QQ('-2') * StableGraph([2, 1, 1], [[1, 3], [2], [4]], [(1, 2), (3, 4)]).boundary_pushforward([psiclass(2, 2, 2), lambdaclass(1, 1, 1), fundclass(1, 1)])
expr += QQ('-2') * StableGraph([2, 1, 1], [[1, 3], [2], [4]], [(1, 2), (3, 4)]).boundary_pushforward([psiclass(2, 2, 2), fundclass(1, 1), lambdaclass(1, 1, 1)])
expr += QQ('1') * StableGraph([2, 1, 1], [[1, 3], [2], [4]], [(1, 2), (3, 4)]).boundary_pushforward([psiclass(2, 2, 2)**2, fundclass(1, 1), fundclass(1, 1)])
expr += QQ('-2') * StableGraph([2, 1, 1], [[1, 3], [2], [4]], [(1, 2), (3, 4)]).boundary_pushforward([lambdaclass(1, 2, 2), fundclass(1, 1), psiclass(1, 1, 1)])
expr += QQ('-2') * StableGraph([2, 1, 1], [[1, 3], [2], [4]], [(1, 2), (3, 4)]).boundary_pushforward([fundclass(2, 2), lambdaclass(1, 1, 1), psiclass(1, 1, 1)])
expr += QQ('3') * StableGraph([2, 1, 1], [[1, 3], [2], [4]], [(1, 2), (3, 4)]).boundary_pushforward([lambdaclass(1, 2, 2), lambdaclass(1, 1, 1), fundclass(1, 1)])
expr += QQ('3') * StableGraph([2, 1, 1], [[1, 3], [2], [4]], [(1, 2), (3, 4)]).boundary_pushforward([lambdaclass(1, 2, 2), fundclass(1, 1), lambdaclass(1, 1, 1)])
expr += QQ('1') * StableGraph([2, 1, 1], [[1, 3], [2], [4]], [(1, 2), (3, 4)]).boundary_pushforward([lambdaclass(1, 2, 2)**2, fundclass(1, 1), fundclass(1, 1)])
expr += QQ('2') * StableGraph([2, 1, 1], [[1, 3], [2], [4]], [(1, 2), (3, 4)]).boundary_pushforward([lambdaclass(2, 2, 2), fundclass(1, 1), fundclass(1, 1)])
expr += QQ('4') * StableGraph([2, 1, 1], [[1, 3], [2], [4]], [(1, 2), (3, 4)]).boundary_pushforward([fundclass(2, 2), lambdaclass(1, 1, 1), lambdaclass(1, 1, 1)])
expr += QQ('-4') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([psiclass(1, 2, 1)*lambdaclass(1, 2, 1), psiclass(1, 2, 1)])
expr += QQ('-4') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([psiclass(1, 2, 1), psiclass(1, 2, 1)*lambdaclass(1, 2, 1)])
expr += QQ('3') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([psiclass(1, 2, 1), psiclass(1, 2, 1)**2])
expr += QQ('3') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([psiclass(1, 2, 1)*lambdaclass(1, 2, 1), lambdaclass(1, 2, 1)])
expr += QQ('1') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([psiclass(1, 2, 1)*lambdaclass(1, 2, 1)**2, fundclass(2, 1)])
expr += QQ('2') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([psiclass(1, 2, 1)*lambdaclass(2, 2, 1), fundclass(2, 1)])
expr += QQ('1') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([psiclass(1, 2, 1), lambdaclass(1, 2, 1)**2])
expr += QQ('2') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([psiclass(1, 2, 1), lambdaclass(2, 2, 1)])
expr += QQ('3') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([psiclass(1, 2, 1)**2, psiclass(1, 2, 1)])
expr += QQ('-2') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([psiclass(1, 2, 1)**2*lambdaclass(1, 2, 1), fundclass(2, 1)])
expr += QQ('-2') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([psiclass(1, 2, 1)**2, lambdaclass(1, 2, 1)])
expr += QQ('1') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([psiclass(1, 2, 1)**3, fundclass(2, 1)])
expr += QQ('3') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([lambdaclass(1, 2, 1), psiclass(1, 2, 1)*lambdaclass(1, 2, 1)])
expr += QQ('1') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([lambdaclass(1, 2, 1)**2, psiclass(1, 2, 1)])
expr += QQ('2') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([lambdaclass(2, 2, 1), psiclass(1, 2, 1)])
expr += QQ('1') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([fundclass(2, 1), psiclass(1, 2, 1)*lambdaclass(1, 2, 1)**2])
expr += QQ('2') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([fundclass(2, 1), psiclass(1, 2, 1)*lambdaclass(2, 2, 1)])
expr += QQ('-2') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([lambdaclass(1, 2, 1), psiclass(1, 2, 1)**2])
expr += QQ('-2') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([fundclass(2, 1), psiclass(1, 2, 1)**2*lambdaclass(1, 2, 1)])
expr += QQ('1') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([fundclass(2, 1), psiclass(1, 2, 1)**3])
expr += QQ('-2') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([lambdaclass(1, 2, 1)*lambdaclass(2, 2, 1), fundclass(2, 1)])
expr += QQ('-1') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([lambdaclass(1, 2, 1), lambdaclass(1, 2, 1)**2])
expr += QQ('-2') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([lambdaclass(1, 2, 1), lambdaclass(2, 2, 1)])
expr += QQ('-1') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([lambdaclass(1, 2, 1)**2, lambdaclass(1, 2, 1)])
expr += QQ('-2') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([lambdaclass(2, 2, 1), lambdaclass(1, 2, 1)])
expr += QQ('-2') * StableGraph([2, 2], [[1], [2]], [(1, 2)]).boundary_pushforward([fundclass(2, 1), lambdaclass(1, 2, 1)*lambdaclass(2, 2, 1)])
