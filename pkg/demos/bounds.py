"""The closed-form bounds, evaluated."""
import math

from emptyply.analysis import (
    d_plus_cover,
    fn_sequence,
    k2m_analysis,
    k8_region_diameter,
    k25_bounds,
    shrink_grid_max,
    shrink_limit,
)

# leaf degree: at angle 2pi/13 neither root of the quadratic lands in the
# allowed window [3, 3 sqrt 2], so 25 leaves cannot fit
b = k25_bounds(2 * math.pi / 13)
print(f"degree bound: lower={b.lower:.4f} (< 3), upper={b.upper:.4f} (> {3 * math.sqrt(2):.4f})")

# ternary trees: the limit point of the staircase always falls in v1's disk
print(f"shrink f(0.5) = {shrink_limit(0.5).f:.6f}, grid max = {shrink_grid_max()[1]:.6f}")

# K_8 regions around the longest edge
for name in ("B+", "A+_4", "B+_1"):
    print(f"diameter of {name}: {k8_region_diameter(name):.4f}")
disk, ratio = d_plus_cover()
print(f"D+ cover circle: center {tuple(round(c, 6) for c in disk.center)}, "
      f"radius {disk.radius:.6f}, coverage ratio {ratio:.6f}")
seq = fn_sequence(8)
print("distance recurrence:", " ".join(f"{x:.4f}" for x in seq), "... -> 2")

s = k2m_analysis()
print(f"K_2,m sectors: alpha_d={s.alpha_d_deg:.4f} beta2={s.beta2_deg:.4f} "
      f"outer={s.outer_capacity} naive={s.naive_bound} combined={s.combined_bound}")
