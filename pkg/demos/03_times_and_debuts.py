# Stopping times, predictable times, debuts, and the accessibility split.
#
# Four atoms, three grid points.  Information arrives in two steps: at
# time 1 we learn which half the outcome is in, at time 2 everything.

from fractions import Fraction

from finsection import (
    INF,
    FilteredSpace,
    RandomTime,
    SampleSpace,
    SigmaAlgebra,
    StochasticSet,
    TimeGrid,
    classify_time,
    combine_min,
    debut,
    discrete_sigma,
    graph,
    interval,
    is_predictable_time,
    is_stopping_time,
    restrict,
    shift,
    trivial_sigma,
)

atoms = ("w1", "w2", "w3", "w4")
space = SampleSpace(atoms, (Fraction(1, 4),) * 4)
grid = TimeGrid((Fraction(0), Fraction(1), Fraction(2)))
halves = SigmaAlgebra((frozenset({"w1", "w2"}), frozenset({"w3", "w4"})))
X = FilteredSpace(space, grid, (trivial_sigma(atoms), halves, discrete_sigma(atoms)))

# Hitting the left half at time 1 is observable at time 1: a stopping
# time.  It is not predictable: at time 0 nothing distinguishes the halves.
hit = RandomTime({"w1": 1, "w2": 1, "w3": INF, "w4": INF})
print("stopping:   ", is_stopping_time(hit, X))
print("predictable:", is_predictable_time(hit, X))

# Delaying any stopping time by one grid step makes it predictable: the
# level sets now sit one index back.
print("shifted predictable:", is_predictable_time(shift(hit, 1, X), X))
print()

# The debut of a stochastic set is the first entry time per atom.
S = StochasticSet(frozenset({("w1", 1), ("w2", 2), ("w3", 2)}))
first = debut(S, X)
print("debut:", first.values)
print("graph(debut) inside S:", graph(first) <= S)

# Stochastic intervals respect half-open flags and an infinite left end.
row = interval(hit, combine_min([hit, first]), X)
print("interval cells:", sorted(row.cells))
print("restricted to {w1}:", restrict(hit, {"w1"}).values)
print()

# Every discrete stopping time is accessible: its graph is covered by
# predictable block-constant times, and the totally inaccessible part
# carries no mass.
split = classify_time(hit, X)
print("cover times:", [rho.values for rho in split.cover])
print("ti mass:", space.prob(split.ti_part.finite_support()))
