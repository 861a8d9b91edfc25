class CalculusException(Exception):
    """Custom exception for mismatched forms, tensors and fields."""
    def __init__(self, message: str):
        super().__init__(message)
