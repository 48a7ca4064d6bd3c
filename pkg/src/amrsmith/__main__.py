"""Entry point for running amrsmith as a module."""

from amrsmith.cli import main

if __name__ == "__main__":
    main()
