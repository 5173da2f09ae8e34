"""
Utilitaires : enveloppes convexes exactes, algèbre linéaire exacte,
sérialisation canonique et configuration du logging.
"""
