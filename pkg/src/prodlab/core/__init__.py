"""Configuration, console output, self-checks and the experiment service."""
