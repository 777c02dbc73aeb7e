# Reusable output components for the command line
