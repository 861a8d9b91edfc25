class CoordinatesException(Exception):
    """Custom exception for coordinate systems, Christoffel symbols and coordinate changes."""
    def __init__(self, message: str):
        super().__init__(message)
