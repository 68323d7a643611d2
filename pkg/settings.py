from pathlib import Path

# Largest group the enumerator will build.
ORDER_CAP = 5000

# Dense adjacency/eigensolver work stops here.
ORACLE_CAP = 1024

# Largest |G| compared against the numeric oracle during a corpus run.
ORACLE_COMPARE_MAX = 300

EIGEN_TOL = 1e-6

MN_MAX_N = 12

# Largest |G x C6| the corpus builds for the G x C6 singularity check.
LARGE_PRODUCT_CAP = 144

DEFAULT_MAX_ORDER = 720

CORPUS_MANIFEST = Path(__file__).with_name("corpus.txt")
