"""
The 4x4 census transform on a single block
==========================================

Walk through the 16 reference positions of one 4x4 block, show which
3x3 group each position is compared against, and print the resulting
8-bit strings.
"""

import numpy as np

from census4x4 import census_bits, group_for, group_neighbor_positions, transform_block_4x4

block = np.array([[16, 2, 3, 13],
                  [5, 11, 10, 8],
                  [9, 7, 6, 12],
                  [4, 14, 15, 1]], dtype=np.uint8)

# Each position uses one of four overlapping 3x3 groups, picked by the
# parity of its row and column.
for r in range(4):
    print(" ".join(f"{group_for(r, c).name}" for c in range(4)))
print()

# One comparison string per position; the first neighbour is the MSB and a
# neighbour that is not smaller than the reference records a 1.
letters = "ABCDEFGHIJKLMNOP"
for r in range(4):
    for c in range(4):
        neighbours = [int(block[p]) for p in group_neighbor_positions(r, c)]
        code = census_bits(int(block[r, c]), neighbours)
        print(f"{letters[4 * r + c]} ref={block[r, c]:>2}  neighbours={neighbours}  "
              f"bits={code:08b}  code={code}")

print()
print(transform_block_4x4(block))
