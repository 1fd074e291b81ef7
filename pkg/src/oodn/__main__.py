"""Module entry point so ``python -m oodn`` behaves like the installed CLI."""

from .cli import main

main()
