"""# descensus

Closed-loop simulator for vision-guided UAV landing on a ground marker.
"""

__version__ = "0.1.0"
