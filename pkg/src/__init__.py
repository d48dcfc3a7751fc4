# Vertex energy of graphs: spectral and Coulson-type routes, exact
# characteristic polynomials, coalescence and seeded verification suites

__version__ = "1.0.0"
