from dataclasses import dataclass

from wordpack.dictionary.reserved import ReservedKind
from wordpack.text.case_class import CaseClass, flip_initial, natural_form, toggle_form
from wordpack.text.tokens import TokenKind

RUN_TOKENS = {
    CaseClass.UPPER: (ReservedKind.CASE_UPPER_BEGIN, ReservedKind.CASE_UPPER_END),
    CaseClass.TOGGLE: (ReservedKind.CASE_TOGGLE_BEGIN, ReservedKind.CASE_TOGGLE_END),
}


@dataclass(frozen=True)
class CasePlan:
    """
    Reserved tokens around a word, or a run of `run_length` words sharing them.

    `raw_escape` means no case token can reproduce the word and it travels as
    raw octets instead.
    """

    before: tuple = ()
    after: tuple = ()
    run_length: int = 1
    raw_escape: bool = False


def is_pure_toggle(token):
    return token.case is CaseClass.TOGGLE and token.surface == toggle_form(token.surface.lower())


def _joins_run(token, case):
    if token.kind is not TokenKind.WORD or token.case is not case:
        return False
    return case is CaseClass.UPPER or is_pure_toggle(token)


def case_plan(token, state, lookahead=()):
    """
    Decides which case tokens escort a word.
    Args:
      token (Token): A WORD token.
      state (SpacingState): Spacing state in force before the word.
      lookahead (iterable): The tokens that follow, consumed lazily to size runs.
    Returns:
      CasePlan: Nothing for the natural rendering (lowercase, capitalised where a
      sentence starts and for "I"); a BEGIN/END pair around runs of two or more
      upper-case or toggle-case words; otherwise a single-word token, or a raw
      escape for patterns no token describes.
    Examples:
      >>> from wordpack.text import Token, SpacingState
      >>> case_plan(Token.word("NASA"), SpacingState(False)).before
      (<ReservedKind.CASE_UPPER_SINGLE: 524034>,)
      >>> case_plan(Token.word("he"), SpacingState(False))
      CasePlan(before=(), after=(), run_length=1, raw_escape=False)
    """
    surface = token.surface
    case = token.case
    if case in RUN_TOKENS and _joins_run(token, case):
        run_length = 1
        for following in lookahead:
            if not _joins_run(following, case):
                break
            run_length += 1
        if run_length >= 2:
            begin, end = RUN_TOKENS[case]
            return CasePlan(before=(begin,), after=(end,), run_length=run_length)

    lower = surface.lower()
    natural = natural_form(lower, state.expects_sentence_case)
    if surface == natural:
        return CasePlan()
    if case is CaseClass.UPPER:
        return CasePlan(before=(ReservedKind.CASE_UPPER_SINGLE,))
    if surface == flip_initial(natural):
        return CasePlan(before=(ReservedKind.CASE_TITLE_SINGLE,))
    if is_pure_toggle(token):
        return CasePlan(before=(ReservedKind.CASE_TOGGLE_SINGLE,))
    return CasePlan(raw_escape=True)
