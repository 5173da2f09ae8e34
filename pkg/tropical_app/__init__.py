"""
Tropical App - Subdivisions matroïdales et algèbre de Plücker exactes
Bibliothèque et CLI pour les subdivisions régulières d'hypersimplexes,
les cellules de Schubert minces, les cartes affines et les éventails.
"""

__version__ = "0.1.0"
