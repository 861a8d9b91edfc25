class CurvatureException(Exception):
    """Custom exception for torsion, curvature and field evaluations."""
    def __init__(self, message: str):
        super().__init__(message)
