"""Main entry point for python -m prodlab execution."""

from .cli import main

if __name__ == "__main__":
    main()
