class NumericException(Exception):
    """Raised for singular matrices, unparsable scalars and backend mismatches."""
    def __init__(self, message: str):
        super().__init__(message)
