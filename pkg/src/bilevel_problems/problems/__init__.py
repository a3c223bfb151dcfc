"""Problem definitions; importing this package registers every problem."""

from . import a_c, d_h, i_l, m, n_o, p_z  # noqa: F401
