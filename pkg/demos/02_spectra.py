"""
Filter convergence and spectra
==============================

Over a finite index set every filter is the up-set of a kernel. A
sequence converges under a filter exactly when the indices landing in the
minimal neighborhood of the limit cover the kernel. The spectrum of a
sequence collects every filter under which it converges somewhere.
"""

from frolik_lab import (
    Filter,
    class_pspectrum,
    class_spectrum,
    discrete,
    f_converges,
    sierpinski,
    spectrum,
)
from frolik_lab.convergence import sorted_spectra

S = sierpinski()
s = (0, 1)
F = Filter.up(2, [0])
print("(0, 1) converges to 0 under", F, ":", f_converges(S, s, F, 0))
print("(0, 1) converges to 1 under", F, ":", f_converges(S, s, F, 1))

# In a discrete space the identity sequence converges only under the
# principal ultrafilters and the improper filter.
for k in range(1, 5):
    print(f"identity on discrete({k}):", spectrum(discrete(k), tuple(range(k))))

# Spectra of a whole class of spaces.
for G in sorted_spectra(class_spectrum([discrete(2), S], 2)):
    print("spectrum:", G)
for G in sorted_spectra(class_pspectrum([discrete(2)], 2)):
    print("pseudospectrum:", G)
