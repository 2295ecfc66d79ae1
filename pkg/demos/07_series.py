"""
Poincare series
===============

Closed-form generating functions, checked against the computed groups.
"""

from braidcoh.series import catalog_names, compare, get, mv_euler_series
from braidcoh.suites import SERIES_SOURCES

print(catalog_names())
print("b3-free:", get("b3-free").series.expand(28))
print("same series from cyclic H^0 ranks:", mv_euler_series() == get("b3-free").series)

_, _, _, _, fn = SERIES_SOURCES["sl2z-h2-mod2"][0]
print(compare("sl2z-h2-mod2", [fn(n) for n in range(0, 41, 2)], list(range(0, 41, 2))))
