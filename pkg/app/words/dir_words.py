from typing import Optional

from app.models.dir_word import DirWord, parity_violation


def parse_dir_word(text: str, finished: bool = True) -> DirWord:
    return DirWord.parse(text, finished)


def check_parity_law(word: DirWord) -> Optional[int]:
    """Return the index of the first parity-law violation, None when the law holds.

    Raw words carry no parity and always pass.
    """
    if not word.finished:
        return None
    return parity_violation(word)
