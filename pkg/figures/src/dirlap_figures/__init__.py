"""Plotting scripts for the dirlap CSV export formats.

These scripts never recompute any mathematics: the byte content of the input
CSV files fully determines what is drawn.
"""

__version__ = "0.1.0"
