# Determinantal ideals of monomial matrices: column reduction, form classification, Valla's pair
