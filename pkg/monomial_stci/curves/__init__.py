# Projective monomial curves: parameters, binomials, matrix and case selection
