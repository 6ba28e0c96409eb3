"""Quick check of the torelli extension module.

Build with `pip install --no-build-isolation -e crates/py` first.
"""
import json
from fractions import Fraction

import torelli

assert torelli.count_trees([2, 2]) == 9
assert torelli.count_trees([3, 3]) == 210

trees = torelli.enumerate_trees([2, 4])
assert len(trees) == 153
t = next(t for t in trees if t.encoding == "0[1c1,1c1,4c2]")
assert t.cont(chern_form=True).startswith("-3*c5(N)")

assert torelli.vanishing([3, 4])[0]
assert not torelli.vanishing([3, 3])[0]

assert torelli.lambda_dims(4) == [1, 1, 1, 2, 1, 1, 1]
assert Fraction(torelli.lambda_eval(3, "l1*l2")) == 1
assert torelli.integrate(1, 2, "e12^2") == "-2"
assert torelli.capelli_check(2, 2)
assert torelli.project_pr(2, 2) == torelli.project_pr(2, 2, solve=True)
assert torelli.product_prefactor(2, 1) == "5"

stars = torelli.enumerate_stars(4, 2)
assert len(stars) == 4
assert json.loads(stars[0].to_json())["g0"] == 2
assert torelli.z_degree(2, [1], 2) == 3
assert torelli.i_function(1, [1, 1], 2) == ["1/2"]
assert torelli.blowup_component_count(2) >= 1

assert torelli.constant("bernoulli", [12]) == "-691/2730"
assert torelli.pullback_script([1, 1]).startswith("#")

try:
    torelli.count_trees([])
except ValueError:
    pass
else:
    raise AssertionError("empty partition accepted")

print("smoke test ok", torelli.__version__)
