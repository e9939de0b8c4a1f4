import sys
from termcolor import colored


# Messages go to stderr, reports and data to stdout
def progress(message):
    print(colored(message, "yellow"), file=sys.stderr)


def done(message):
    print(colored(message, "green"), file=sys.stderr)


def warning(message):
    print(colored(f"warning: {message}", "magenta"), file=sys.stderr)


def failure(message):
    print(colored(f"error: {message}", "red", attrs=["bold"]), file=sys.stderr)


def heading(message):
    print(colored(message, "cyan", attrs=["bold"]), file=sys.stderr)
