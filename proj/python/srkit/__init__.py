"""Superregular lower triangular Toeplitz matrices over finite fields and
the MDP convolutional-code parity data built from them."""

try:
    from ._srkit import *  # noqa: F401,F403
    from ._srkit import __version__  # noqa: F401
except ImportError:  # pragma: no cover - direct extension-on-path layout
    from _srkit import *  # type: ignore # noqa: F401,F403
    from _srkit import __version__  # type: ignore # noqa: F401
