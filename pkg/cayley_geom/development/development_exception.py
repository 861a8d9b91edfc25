class DevelopmentException(Exception):
    """Custom exception for developments and their rendering."""
    def __init__(self, message: str):
        super().__init__(message)
