"""Initial-sound classes for Middle English spellings.

Only word onsets matter for alliteration. Every letter is pronounced, so a
cluster classifies by its first sound (kn -> K, sl -> S); the exceptions are
digraphs that spell a single sound (sh, sch, th, ch, ph, qu) and the
position-dependent letters c, g, yogh, i/j, u/v and y.
"""

import unicodedata

from shared.schemas import SoundClass, SoundKind
from versevar.errors import SoundClassError

VOWELS = frozenset("aeiouæœ")
FRONT_VOWELS = frozenset("eiy")

# Letters whose sound does not depend on what follows
SIMPLE_ONSETS: dict[str, SoundKind] = {
    "b": SoundKind.B,
    "d": SoundKind.D,
    "f": SoundKind.F,
    "h": SoundKind.H,
    "j": SoundKind.J_SOFT_G,
    "k": SoundKind.K,
    "l": SoundKind.L,
    "m": SoundKind.M,
    "n": SoundKind.N,
    "p": SoundKind.P,
    "q": SoundKind.K,
    "r": SoundKind.R,
    "v": SoundKind.V,
    "w": SoundKind.W,
    "þ": SoundKind.TH,
    "ð": SoundKind.TH,
}

# Onset spellings that form their own alliterative class
CLUSTER_ONSETS = ("ch", "x", "z")


def _base_letters(word: str) -> str:
    """Lowercase letters with diacritics removed (é -> e)."""
    decomposed = unicodedata.normalize("NFD", unicodedata.normalize("NFC", word).lower())
    stripped = "".join(ch for ch in decomposed if not unicodedata.combining(ch))
    # ezh spells yogh
    return unicodedata.normalize("NFC", stripped).replace("ʒ", "ȝ")


def initial_sound_class(word: str) -> SoundClass:
    """Classify the initial sound of a normalized word.

    Args:
        word: Nonempty word, lowercased and NFC-normalized

    Returns:
        The word's initial sound class

    Raises:
        SoundClassError: if the first letter is not covered by any rule
    """
    if not word:
        raise ValueError("cannot classify an empty word")

    letters = _base_letters(word)
    first = letters[0]
    second = letters[1] if len(letters) > 1 else ""

    if first in VOWELS:
        # consonantal i before a vowel is j (ioye = joy)
        if first == "i" and second in VOWELS:
            return SoundClass(kind=SoundKind.J_SOFT_G)
        return SoundClass(kind=SoundKind.VOWEL)

    if first == "y":
        if second and second in VOWELS:
            return SoundClass(kind=SoundKind.Y)
        return SoundClass(kind=SoundKind.VOWEL)

    if first == "c":
        if second == "h":
            return SoundClass(kind=SoundKind.CLUSTER, letters="ch")
        if second in FRONT_VOWELS:
            return SoundClass(kind=SoundKind.S)
        return SoundClass(kind=SoundKind.K)

    if first in ("g", "ȝ"):
        if second in FRONT_VOWELS:
            return SoundClass(kind=SoundKind.J_SOFT_G)
        return SoundClass(kind=SoundKind.G_HARD)

    if first == "s":
        if letters.startswith(("sh", "sch")):
            return SoundClass(kind=SoundKind.SH)
        return SoundClass(kind=SoundKind.S)

    if first == "t":
        if second == "h":
            return SoundClass(kind=SoundKind.TH)
        return SoundClass(kind=SoundKind.T)

    if first == "p" and second == "h":
        return SoundClass(kind=SoundKind.F)

    for onset in CLUSTER_ONSETS:
        if letters.startswith(onset):
            return SoundClass(kind=SoundKind.CLUSTER, letters=onset)

    if first in SIMPLE_ONSETS:
        return SoundClass(kind=SIMPLE_ONSETS[first])

    raise SoundClassError(word[0], word)
