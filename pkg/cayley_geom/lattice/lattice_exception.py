class LatticeException(Exception):
    """Custom exception for group construction and lattice classification errors."""
    def __init__(self, message: str):
        super().__init__(message)
