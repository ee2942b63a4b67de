"""Command-line front end for quatpluri."""

__all__: list[str] = []
