"""Allow ``python -m app`` to run the vgalg CLI."""

from app.cli import main

if __name__ == "__main__":
    main()
