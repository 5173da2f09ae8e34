"""
Algèbre de Plücker : polynômes exacts, générateurs, cartes affines et valuations.
"""
