# Souslin schemes over a small paving: build, evaluate, merge, monotonize.
#
# A scheme hangs a paving set on every finite tuple of positive integers
# (up to a depth bound K and a branching bound B).  Evaluating it unions,
# over all index sequences, the intersection along each sequence's
# prefixes.

from finsection import (
    Paving,
    SouslinScheme,
    check_monotone,
    eval_scheme,
    merge_intersection,
    merge_union,
    monotonize,
    theta,
    theta_inv,
)

# The pairing bijection drives the merge constructions: it is increasing
# in each coordinate and walks square shells of the quarter plane.
print("pairing table (k across, m down):")
for m in range(1, 5):
    print("  ", [theta(k, m) for k in range(1, 5)])
print("inverse of 7:", theta_inv(7))
print()

# A paving of all subsets of a three-point ground set (so it is closed
# under finite unions and intersections, which monotonize requires).
ground = ("x", "y", "z")
paving = Paving.from_sets(
    ground, [[e for i, e in enumerate(ground) if bits >> i & 1] for bits in range(8)]
)

# Depth 2, branching 2.  Missing nodes default to the whole ground set.
scheme = SouslinScheme(
    paving,
    2,
    2,
    {
        (1,): paving.mask_of(["x"]),
        (2,): paving.mask_of(["y"]),
        (1, 1): paving.mask_of(["x"]),
        (2, 1): paving.mask_of(["y"]),
    },
)
print("eval:", sorted(eval_scheme(scheme)))
print("monotone before:", check_monotone(scheme))

mono = monotonize(scheme)
print("monotone after :", check_monotone(mono))
print("eval preserved :", sorted(eval_scheme(mono)))
print()

# Merging schemes keeps everything inside one scheme: the union merge
# reroutes the first index entry through the pairing bijection, the
# intersection merge reroutes the depth.
other = SouslinScheme(paving, 1, 2, {(1,): paving.mask_of(["z"]), (2,): paving.mask_of(["y", "z"])})
union = merge_union([scheme, other])
inter = merge_intersection([scheme, other])
print("union merge  (K=%d, B=%d):" % (union.depth, union.branching), sorted(eval_scheme(union)))
print("intersection (K=%d, B=%d):" % (inter.depth, inter.branching), sorted(eval_scheme(inter)))
