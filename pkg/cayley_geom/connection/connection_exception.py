from typing import Optional


class ConnectionException(Exception):
    """Custom exception for connection errors; carries site and arrow labels when known."""
    def __init__(self, message: str, site: Optional[str] = None, arrow: Optional[str] = None):
        super().__init__(message)
        self.site = site
        self.arrow = arrow

    def set_site(self, site: str):
        if self.site is None:
            self.site = site

    def __str__(self) -> str:
        prefix = ""
        if self.site is not None:
            prefix += f"site {self.site}: "
        if self.arrow is not None:
            prefix += f"arrow {self.arrow}: "
        return prefix + super().__str__()
