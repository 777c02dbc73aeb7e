# Brute-force finite-field ground truth for set-theoretic equalities
