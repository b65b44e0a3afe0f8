"""Subcommand groups of the command-line front end: knot, group and morse."""
