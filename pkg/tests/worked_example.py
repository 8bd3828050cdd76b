"""Hand-checked end-to-end example shared by several test modules.

A {231,221}-avoiding filling of (10,10,10,7,4,4) with content (2,2,3,1,1,1),
its increasing blowup, the border chain sequences, and its image under the
composed map.  Every value below was verified cell by cell on paper.
"""

from shapewilf import parse_shape

SHAPE = parse_shape("10,10,10,7,4,4")
CONTENT = (2, 2, 3, 1, 1, 1)
FILLING = (1, 4, 6, 5, 2, 1, 3, 2, 3, 3)

BLOWN_SHAPE = parse_shape("10,10,10,10,10,10,10,7,4,4")
BLOWN_PLACEMENT = (1, 8, 10, 9, 3, 2, 5, 4, 6, 7)

# I-sequence of the blown placement along the canonical border order.
CHAIN_SEQ = (0, 1, 2, 3, 3, 3, 2, 2, 2, 3, 3, 3, 4, 5, 4, 3, 3, 2, 2, 1, 0)
# Pointwise 0 -> 0, else N - I + 1; equals the image placement's I-sequence.
FLIPPED_SEQ = (0, 1, 1, 1, 2, 1, 1, 2, 3, 3, 2, 3, 3, 3, 3, 3, 2, 2, 1, 1, 0)

IMAGE_PLACEMENT = (9, 2, 1, 10, 4, 8, 3, 7, 6, 5)
IMAGE_FILLING = (5, 1, 1, 6, 2, 4, 2, 3, 3, 3)

# A second worked filling on the same shape (used for containment tests):
# it avoids 4312.
SECOND_FILLING = (5, 3, 1, 6, 4, 2, 3, 1, 3, 2)
