"""Common utility functions for fsdaudit."""

import inflect

p = inflect.engine()


def count_noun(count: int, noun: str) -> str:
    """Render a count with a correctly pluralized noun.

    Args:
        count: How many.
        noun: Singular form of the noun.

    Returns:
        str: For example ``"1 flag"`` or ``"7 flags"``.
    """
    return f"{count} {p.plural_noun(noun, count)}"
