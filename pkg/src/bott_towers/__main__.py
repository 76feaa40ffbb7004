"""Module entry point so that ``python -m bott_towers`` runs the CLI."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())
