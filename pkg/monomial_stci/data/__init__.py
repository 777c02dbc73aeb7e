# Caching of finite-field handles and point enumerations
