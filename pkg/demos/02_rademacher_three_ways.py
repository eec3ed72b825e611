"""Three independent routes to the Rademacher symbol.

The symbol psi assigns an integer to every class, and the library computes
it three ways that share no code path:

  1. exact arithmetic: psi = phi - 3 sgn(c (a+d)), with phi built from
     Dedekind sums evaluated as exact rationals;
  2. combinatorics: psi = #R - #L read straight off the necklace;
  3. topology: the winding number of Delta(z) v^6 along the closed orbit
     of the geodesic flow, tracked numerically.

Route 3 is the linking number of the knot with the missing trefoil, so the
agreement below is the whole story in one table.
"""

from modknots import EnumerationParams, enumerate_classes, psi, psi_from_word, winding_psi

print(f"{'necklace':<10} {'dedekind':>9} {'word':>6} {'winding':>8}")
for record in enumerate_classes(EnumerationParams(trace_bound=12)):
    exact = psi(record.rep)
    word = psi_from_word(record.necklace)
    wound = winding_psi(record.rep)
    flag = "" if exact == word == wound else "   <- disagreement!"
    print(f"{record.necklace:<10} {exact:>9} {word:>6} {wound:>8}{flag}")

# The word route makes two structural facts obvious.  Swapping L and R
# mirrors the knot and negates psi; rotating the word (conjugating the
# class) changes nothing.  The exact route makes a third fact checkable
# on matrices that are far from any canonical word:
from modknots import conjugate, word_to_matrix  # noqa: E402

gamma = word_to_matrix("LLRRLR")
mover = word_to_matrix("RLLLR")
print()
print("conjugation invariance:", psi(gamma), "=", psi(conjugate(gamma, mover)))
print("projective invariance: ", psi(gamma), "=", psi(-gamma))
