"""Marks the test directory so sibling modules import as plain modules."""
