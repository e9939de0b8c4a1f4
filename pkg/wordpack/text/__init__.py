from wordpack.text.case_class import CaseClass, classify_case
from wordpack.text.detokenizer import detokenize
from wordpack.text.tokenizer import tokenize
from wordpack.text.tokens import SpacingState, Token, TokenKind, replay
