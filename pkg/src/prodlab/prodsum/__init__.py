"""Product-of-sums statistic, its path versions and proof-device diagnostics."""
