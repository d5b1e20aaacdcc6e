"""Delta-convexity on graphs.

+ Compute Delta-intervals, Delta-convex hulls and convex sets.
+ Compute Helly, Radon, Caratheodory numbers and rank by exhaustive search
  with deterministic witnesses.
+ Evaluate closed forms for block graphs and chordal graphs and cross-check
  them against brute force.
+ Audit graph6 streams for the known inequalities and for graphs
  where the Helly and Radon numbers differ.
+ Generate triangle chains and triangle fans.
"""


__version__ = '0.1.0'
__license__ = 'MIT'
