"""
Polytopes de matroïdes et subdivisions régulières.
"""
