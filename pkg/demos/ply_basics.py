"""Ply, vertex-ply and the empty-ply test on a few hand-made drawings."""
from emptyply import Drawing, is_empty_ply, ply, vertex_ply
from emptyply.constructions import theta_graph
from emptyply.plycore import count_crossings, ply_report

# a single unit edge: each disk holds only its own vertex
p2 = Drawing.from_edges([(0, 0), (1, 0)], [(0, 1)])
print("unit edge:", ply(p2)[0], vertex_ply(p2)[0], bool(is_empty_ply(p2)))

# a short tail puts the third vertex inside the middle vertex's disk
path = Drawing.from_edges([(0, 0), (1, 0), (1.2, 0)], [(0, 1), (1, 2)])
res = is_empty_ply(path)
print("short tail: empty =", res.empty, "witness (vertex, disk owner) =", res.witness)

# ply and vertex-ply can differ: the theta drawing has a point in five
# disks while no vertex lies in more than four
theta = theta_graph(5, "nonplanar")
rep = ply_report(theta)
print(f"theta m=5: ply={rep.ply} at {rep.ply_witness}, vertex_ply={rep.vertex_ply}, "
      f"crossings={count_crossings(theta)}")
