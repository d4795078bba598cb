"""
Coreflexivity certificates
==========================

Three combinatorial tests on allowed paths.  Only the finite-count test
yields unconditional conclusions; the other two certify an equivalence.
"""

from pathlib import Path

from pathcoalg import MonomialShape, XEntry, loop, report, thick
from pathcoalg.io import dumps_report, load

# a loop with nothing forbidden has infinitely many paths u -> u
print(report(MonomialShape.full(loop())).to_text())

# forbidding xx makes every count finite
print(report(MonomialShape.forbid(loop(), ["x x"])).to_text())

# thick quiver: bounded lengths but infinitely many arrows
xdata = {"b": XEntry(1, (("x",),), 0)}
print(report(MonomialShape.full(thick()), xdata).to_text())

# the same analysis from a shape file, as JSON
sf = load(Path(__file__).with_name("data") / "thick.q")
print(dumps_report(report(sf.shape(), sf.xdata)))
