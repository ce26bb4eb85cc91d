# -*- coding: utf-8 -*-
"""
Command line entry point of the `lyndon` script.

Exit status: 0 on success, 1 on a rejection or a failing check, 2 on a
usage error or an input outside the domain of the command.
"""
import sys
import traceback
from optparse import OptionParser

from lyndonlib import get_version, utils
from lyndonlib.config import Settings
from lyndonlib.exceptions import DomainError, NotPspError
from lyndonlib.log import logger, set_log_level


EXIT_OK, EXIT_REJECT, EXIT_USAGE = 0, 1, 2


def _exit_code(e):
    if e.code is None:
        return EXIT_OK
    if isinstance(e.code, int):
        return e.code
    return EXIT_REJECT


def run(argv=None):
    """
    Parse the global options, load the settings and run the command.

    Returns:
        The exit status.
    """
    argv = sys.argv[1:] if argv is None else list(argv)
    usage = "usage: %prog [options] command [cmd_options]"
    description = "Linear-time algorithms on Lyndon words: Lyndon suffix"\
        " tables, left Lyndon trees and forests, prefix standard"\
        " permutations and their inverses. Run 'lyndon help' for the list"\
        " of commands."
    parser = OptionParser(usage=usage, version=get_version(),
        description=description)
    parser.disable_interspersed_args()
    parser.add_option("-d", "--debug", action="store_true", dest="debug",
        default=False, help=("enable debug messages"))
    parser.add_option("-q", "--quiet", action="store_true", dest="quiet",
        default=False, help="don't print status messages to stdout")
    parser.add_option("-c", "--config", action="store", dest="config",
        default=None, help="read the settings from CONFIG instead of the"
        " closest .lyndonrc", metavar="CONFIG")
    parser.add_option("--traceback", action="store_true", dest="trace",
        default=False, help="print full traceback on exceptions")
    parser.add_option("--disable-colors", action="store_true",
        dest="color_disable", default=False,
        help="disable colors in the output of commands")
    try:
        (options, args) = parser.parse_args(argv)
    except SystemExit as e:
        return _exit_code(e)

    if len(args) < 1:
        parser.print_help()
        return EXIT_USAGE

    utils.DISABLE_COLORS = options.color_disable or not sys.stdout.isatty()

    try:
        settings = Settings.load(options.config)
        set_log_level(settings.get('main', 'log_level'))
    except (IOError, ValueError) as e:
        utils.ERRMSG("lyndon: %s" % e)
        return EXIT_USAGE
    if options.quiet:
        set_log_level('WARNING')
    elif options.debug:
        set_log_level('DEBUG')
    logger.debug("Using settings %r." % settings)

    cmd = args[0]
    try:
        return utils.exec_command(cmd, args[1:], settings)
    except utils.UnknownCommandError:
        utils.ERRMSG("lyndon: Command %s not found" % cmd)
        return EXIT_USAGE
    except SystemExit as e:
        return _exit_code(e)
    except DomainError as e:
        utils.ERRMSG("lyndon: %s" % e)
        return EXIT_USAGE
    except NotPspError as e:
        utils.ERRMSG("lyndon: %s" % e)
        return EXIT_REJECT
    except Exception:
        if options.trace:
            traceback.print_exc()
        else:
            formatted_lines = traceback.format_exc().splitlines()
            utils.ERRMSG(formatted_lines[-1])
        return EXIT_REJECT


def main():
    sys.exit(run())
