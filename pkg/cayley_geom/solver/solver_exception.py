class SolverException(Exception):
    """Custom exception for connection searches and existence tests."""
    def __init__(self, message: str):
        super().__init__(message)
