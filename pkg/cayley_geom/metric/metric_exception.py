from typing import Optional


class MetricException(Exception):
    """Custom exception for invalid metrics; carries the offending site when known."""
    def __init__(self, message: str, site: Optional[str] = None):
        super().__init__(message)
        self.site = site

    def set_site(self, site: str):
        if self.site is None:
            self.site = site

    def __str__(self) -> str:
        if self.site is not None:
            return f"{super().__str__()} at site {self.site}"
        else:
            return super().__str__()
