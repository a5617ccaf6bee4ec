"""Near-Moore-bound diameter-2 graphs from perfect difference sets.

Builds difference graphs from Singer difference sets, polarity (Brown)
graphs and a hybrid family over ``Z_p x Z_p``, and produces checked vertex
bijections between difference graphs and polarity graphs.
"""

__version__ = "0.1.0"
