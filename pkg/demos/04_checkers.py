#!/usr/bin/env python3
"""Run the whole checker battery on one instance and read the reports.

Each checker evaluates both sides of one identity or inequality.
explicit_pass appears only where a concrete constant is asserted;
everything with an unspecified constant reports measured_constant
instead, so theorem-given facts and empirical observations never blur.
"""

from ffdist import make_field
from ffdist.checks import CHECKERS
from ffdist.generators import GeneratorSpec, generate

q, s = 13, 2
ctx = make_field(q)
E = generate(ctx, s, GeneratorSpec("uniform_random", size=30, seed=41))
F = generate(ctx, s, GeneratorSpec("uniform_random", size=48, seed=42))

print(f"instance: q = {q}, s = {s}, #E = {E.size}, #F = {F.size}\n")
width = max(len(name) for name in CHECKERS)
for name in sorted(CHECKERS):
    rep = CHECKERS[name](ctx, E, F)
    verdict = ("pass" if rep.explicit_pass
               else "FAIL" if rep.explicit_pass is False else "  --")
    measured = (f"measured {rep.measured_constant:10.4g}"
                if rep.measured_constant is not None else "")
    hyp = "hyp ok " if rep.hypothesis_met else "hyp off"
    print(f"{name:{width}}  {verdict}  {hyp}  lhs = {rep.lhs:12.6g}  {measured}")

print("\nfull JSON of one report:")
print(CHECKERS["second_moment"](ctx, E, F).to_json())
