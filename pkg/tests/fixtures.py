"""Expected input/output pairs for the shipped grammars.

Entries marked ``name_derived`` were reconstructed from the name of the
output letter because the source glyph is not recoverable from print.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Case:
    lang: str
    source: str  # hex code points
    expected: str
    note: str = ""
    name_derived: bool = False


NFC_CASES = [
    ("0627 0653", "0622", "alef + maddah composes"),
    ("0651 0650", "0650 0651", "shadda + kasra reorders"),
    ("0627 0670 0653", "0622 0670", "composition across a lower-class mark"),
]

VISUAL_COMMON_CASES = [
    ("0648 064F", "06C7"),
    ("0648 0619", "06C7"),
    ("06C7", "06C7"),
]

# Urdu visual rules, one per position class, in words that exercise the position.
URDU_VISUAL_CASES = [
    Case("ur", "0631 0615", "0691", "rreh, isolated"),
    Case("ur", "0628 0631 0615 0627", "0628 0691 0627", "rreh, medial"),
    Case("ur", "0643 0627", "06A9 0627", "kaf initial"),
    Case("ur", "0628 0643 0631", "0628 06A9 0631", "kaf medial"),
    Case("ur", "0628 0643", "0628 0643", "kaf final stays"),
    Case("ur", "0628 0649", "0628 06CC", "alef maksura final"),
    Case("ur", "0628 0649 0020 0628", "0628 06CC 0020 0628", "alef maksura final before space"),
    Case("ur", "0649 0628", "0649 0628", "alef maksura initial stays"),
    Case("ur", "0647", "06C1", "heh isolated"),
    Case("ur", "0020 0647 0020", "0020 06C1 0020", "heh isolated between spaces"),
    Case("ur", "0647 0627", "0647 0627", "heh initial stays"),
]

READING_CASES = [
    Case("pa", "06A9 0626 064A", "06A9 0626 06CC", "yeh -> farsi yeh"),
    Case("ckb", "0644 0647 0634 06AA 0631", "0644 0647 0634 06A9 0631", "swash kaf -> keheh"),
    Case("fa", "0645 0624 0633 0633 0647", "0645 0648 0633 0633 0647", "waw with hamza -> waw"),
    Case("ur", "064A", "06CC", "yeh -> farsi yeh"),
    Case("ks", "0628 064A 062A", "0628 06CC 062A", "yeh -> farsi yeh"),
    Case("sd", "0628 06CC 062A", "0628 064A 062A", "farsi yeh -> yeh"),
    Case("ug", "0633 0627 06CC", "0633 0627 064A", "farsi yeh -> yeh", name_derived=True),
    Case("bal", "062F 0626 06CC 0629", "062F 0626 06CC 062A", "teh", name_derived=True),
    Case("ks", "06C1 06CD 0020 062A 06A9", "06C1 0620 0020 062A 06A9", "kashmiri yeh", name_derived=True),
    Case("sd", "06AF 0648 0647 0647", "06AF 0648 06C1 0647", "heh goal", name_derived=True),
    Case("ur", "0635 0648 0631 0629", "0635 0648 0631 06C3", "teh marbuta goal", name_derived=True),
    Case("azb", "064A 06CC 0643", "064A 06CC 0643", "identity"),
    Case("ms", "064A 06CC 0629", "064A 06CC 0629", "identity"),
]
