"""
Arbres phylogénétiques et espace des arbres (d = 2).
"""
