# Classify the named three-qubit states: separability, sigma-equality case,
# and special-state tag read off the core tensor's support pattern.
#
#   python demos/03_special_state_gallery.py

import numpy as np

from hosvd3 import classify, normalize

GALLERY = {}


def state(name, **entries):
    flat = np.zeros(8, dtype=complex)
    for key, value in entries.items():
        i1, i2, i3 = (int(ch) for ch in key)
        flat[4 * (i1 - 1) + 2 * (i2 - 1) + (i3 - 1)] = value
    GALLERY[name] = normalize(flat)


s = np.sqrt
state("product |111>",          **{"111": 1})
state("biseparable C|AB",       **{"111": 1, "221": 1})
state("biseparable B|CA",       **{"111": 1, "212": 1})
state("GHZ p=q",                **{"111": 1, "222": 1})
state("GHZ p=0.8 q=0.6",        **{"111": 0.8, "222": 0.6})
state("W",                      **{"112": 1, "121": 1, "211": 1})
state("slice S1",               **{"111": s(0.3), "221": s(0.3), "112": s(0.2), "222": -s(0.2)})
state("slice S2",               **{"111": s(0.3), "212": s(0.3), "121": s(0.2), "222": -s(0.2)})
state("slice S3",               **{"111": s(0.3), "122": s(0.3), "211": s(0.2), "222": -s(0.2)})
state("beechnut B1 (generic)",  **{"111": s(0.4), "122": s(0.25), "212": s(0.2), "221": s(0.15)})
state("beechnut B1 (balanced)", **{"111": 0.5, "122": 0.5, "212": 0.5, "221": 0.5})
state("generic entangled",      **{"111": 0.62, "112": 0.31, "121": 0.41, "211": 0.35,
                                   "122": 0.27, "212": 0.23, "221": 0.18, "222": 0.21})

header = f"{'state':<24} {'separability':<18} {'case':<9} {'special':<8} sigma1^2 triple"
print(header)
print("-" * len(header))
for name, psi in GALLERY.items():
    c = classify(psi)
    sig = ", ".join(f"{v:.4f}" for v in c.sigma_triple)
    warn = " (gauge!)" if c.gauge_warning else ""
    print(f"{name:<24} {c.separability:<18} {c.case:<9} {c.special:<8} ({sig}){warn}")

print("""
Notes
-----
- case1 means all three sigma1^2 agree, case2_jk that only modes j,k agree,
  case3 that all differ.
- Special tags require genuine entanglement; a gauge warning marks states
  with degenerate mode spectra, where the core support is basis-dependent.
- The balanced beechnut state sits at the polytope center (1/2, 1/2, 1/2),
  where every mode is degenerate.
""")
