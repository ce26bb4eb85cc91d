import io
import multiprocessing
import sys
from json import dumps as compile_json

from lyndonlib.core_order import Word
from lyndonlib.exceptions import DomainError
from lyndonlib.log import logger, output
from lyndonlib.prefix_order import Permutation


def MSG(msg):
    """
    STDOUT logging function for command results
    """
    output.info('%s' % msg)


def ERRMSG(msg):
    """
    STDERR logging function
    """
    logger.error('%s' % msg)


def discover_commands():
    """
    Inspect commands.py and find all available commands
    """
    import inspect
    from lyndonlib import commands

    command_table = {}
    fns = inspect.getmembers(commands, inspect.isfunction)

    for name, fn in fns:
        if name.startswith("cmd_"):
            command_table.update({
                name.split("cmd_")[1].replace('_', '-'): fn
            })

    return command_table


class UnknownCommandError(Exception):
    pass


def exec_command(command, *args, **kwargs):
    """
    Execute given command and return its exit status
    """
    commands = discover_commands()
    try:
        cmd_fn = commands[command]
    except KeyError:
        raise UnknownCommandError(command)
    status = cmd_fn(*args, **kwargs)
    return 0 if status is None else status


#################################################
# Parsing of command-line arguments

def parse_word(text):
    """
    Turn command-line text into a Word over a..z.

    Raises:
        DomainError, on an empty word or any byte outside a..z.
    """
    text = text.strip()
    if not text:
        raise DomainError("Empty word.")
    for k, c in enumerate(text):
        if not 'a' <= c <= 'z':
            raise DomainError("Malformed word: %r at position %d is not a"
                " letter in a..z." % (c, k))
    return Word(text)


def parse_permutation(text):
    """Comma separated decimals, no whitespace, e.g. 1,0,4,3,5,2,6."""
    return Permutation.parse(text)


def parse_length(text):
    try:
        n = int(text)
    except ValueError:
        raise DomainError("Malformed length: %r" % text)
    if n < 2:
        raise DomainError("The length must be at least 2, got %d." % n)
    return n


def read_argument(args, filename=None, stdin=None):
    """
    The single input of a command: the positional argument, the content of
    `filename`, or standard input when the argument or the file name is '-'.
    """
    stdin = stdin or sys.stdin
    if filename is not None:
        if args:
            raise DomainError("Give either an argument or --file, not both.")
        if filename == '-':
            logger.debug("Reading input from standard input.")
            return stdin.read().strip()
        logger.debug("Reading input from %s." % filename)
        try:
            with io.open(filename, encoding='utf-8') as fh:
                return fh.read().strip()
        except (IOError, OSError) as e:
            raise DomainError("Cannot read %s: %s" % (filename,
                e.strerror or e))
        except UnicodeDecodeError as e:
            raise DomainError("Cannot decode %s as UTF-8: %s" % (filename, e))
    if not args:
        raise DomainError("No input given.")
    if args[0] == '-':
        logger.debug("Reading input from standard input.")
        return stdin.read().strip()
    return args[0]


# Stuff for command line colored output

COLORS = [
    'BLACK', 'RED', 'GREEN', 'YELLOW',
    'BLUE', 'MAGENTA', 'CYAN', 'WHITE'
]

DISABLE_COLORS = False


def color_text(text, color_name, bold=False):
    """
    This command can be used to colorify command line output. If the shell
    doesn't support this or the --disable-colors options has been set, it just
    returns the plain text.

    Usage:
        print("%s" % color_text("This text is red", "RED"))
    """
    if color_name in COLORS and not DISABLE_COLORS:
        return '\033[%s;%sm%s\033[0m' % (
            int(bold), COLORS.index(color_name) + 30, text)
    else:
        return text


class Pool(object):
    """
    a dummy pool that has the same interface as multiprocessing.Pool
    it runs every task in sync, in this process
    """
    def __init__(self, *args, **kwargs):
        pass

    def map(self, func, iterable):
        return [func(item) for item in iterable]

    def __enter__(self):
        return self

    def __exit__(self, *exc_info):
        return False


def get_pool(size):
    """
    A pool of `size` worker processes, or the in-process Pool when a single
    worker is asked for.
    """
    if size <= 1:
        logger.debug("Running tasks in sequence.")
        return Pool()
    logger.debug("Running tasks on %d processes." % size)
    return multiprocessing.Pool(size)
