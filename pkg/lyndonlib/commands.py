# -*- coding: utf-8 -*-
"""
In this file we have all the top level commands of the lyndon client.
Since we're using a way to automatically list them and execute them, when
adding code to this file you must take care of the following:
 * Added functions must begin with 'cmd_' followed by the actual name of the
   command being used in the command line, underscores standing for dashes
   (eg cmd_inverse_psp is `lyndon inverse-psp`)
 * The description for each function that we display to the user is read from
   the __doc__ attribute. So, when adding docstring to a new function make
   sure you add an oneliner which is descriptive and is meant to be seen by
   the user.
 * All functions take the argument list and the Settings, use an
   OptionParser with a usage and description field, and return the exit
   status (None means 0).
"""
import os
import sys
from optparse import OptionParser

from lyndonlib import (bench, config, lyndon_scan, lyndon_tree, prefix_order,
    psp_inverse, render, selfcheck, utils)
from lyndonlib.exceptions import NotPspError
from lyndonlib.log import logger


REJECT = "REJECT: not a PSP of a binary Lyndon word"
REJECT_ANY = "REJECT: not a PSP of a Lyndon word"


def _parser(usage, description, formats=None):
    parser = OptionParser(usage=usage, description=description)
    parser.add_option("-f", "--file", action="store", dest="filename",
        default=None, help="Read the input from FILE ('-' for standard"
        " input) instead of the command line.", metavar="FILE")
    if formats:
        parser.add_option("--format", action="store", type="choice",
            choices=list(formats), dest="format", default=render.TEXT,
            help="Output format, one of: %s." % ', '.join(formats))
    return parser


def _add_count_option(parser):
    parser.add_option("--count", action="store_true", dest="count",
        default=False, help="Also print the comparison counters.")


def _read_word(parser, options, args):
    if len(args) > 1:
        parser.error("Too many arguments were provided. Aborting...")
    return utils.parse_word(utils.read_argument(args, options.filename))


def _read_permutation_and_length(parser, options, args):
    """PERM N on the command line, or N alone with --file holding PERM."""
    expected = 1 if options.filename else 2
    if len(args) != expected:
        parser.error("Expected a permutation and a length.")
    perm = utils.parse_permutation(
        utils.read_argument(args[:-1], options.filename))
    return perm, utils.parse_length(args[-1])


def _print_budget(parser, options, budget):
    if not options.count:
        return
    if options.format not in (render.TEXT, render.TSV):
        parser.error("--count works with text and tsv output only.")
    utils.MSG("# %s" % ' '.join('%s=%d' % item
        for item in sorted(budget.as_dict().items())))


def _option_or_setting(value, settings, section, key):
    """The command-line value when given, even 0, else the setting."""
    if value is not None:
        return value
    return settings.getint(section, key)


def cmd_lyns(argv, settings):
    "Print the Lyndon suffix table of a word."

    usage = "usage: %prog [lyndon_options] lyns [options] WORD"
    description = "Prints, for every position j of WORD, the length of the"\
        " longest Lyndon suffix of the prefix ending at j. With --periods"\
        " WORD must be a Lyndon word and the smallest period of every"\
        " prefix is printed as well."
    parser = _parser(usage, description, render.TABLE_FORMATS)
    parser.add_option("--periods", action="store_true", dest="periods",
        default=False, help="Add the period row (Lyndon words only).")
    _add_count_option(parser)
    (options, args) = parser.parse_args(argv)
    word = _read_word(parser, options, args)

    budget = lyndon_scan.ComparisonBudget()
    if options.periods:
        lyns, period = lyndon_scan.lyndon_suffix_table_lyndon(word, budget)
        columns = [('lyns', lyns), ('period', period)]
    else:
        columns = [('lyns', lyndon_scan.lyndon_suffix_table(word, budget))]
    utils.MSG(render.position_table(word, columns, options.format))
    _print_budget(parser, options, budget)


def cmd_factorize(argv, settings):
    "Print the Lyndon factorization of a word."

    usage = "usage: %prog [lyndon_options] factorize [options] WORD"
    description = "Prints the starting positions of the factors of the"\
        " Lyndon factorization of WORD and the factors themselves."
    parser = _parser(usage, description, render.TABLE_FORMATS)
    (options, args) = parser.parse_args(argv)
    word = _read_word(parser, options, args)

    lyns = lyndon_scan.lyndon_suffix_table(word)
    starts = lyndon_scan.lyndon_factorize(word, lyns)
    utils.MSG(render.factorization(word, starts, options.format))


def cmd_is_lyndon(argv, settings):
    "Tell whether a word is a Lyndon word."

    usage = "usage: %prog [lyndon_options] is-lyndon [options] WORD"
    description = "Exits with status 0 if WORD is a Lyndon word and 1"\
        " otherwise."
    parser = _parser(usage, description)
    (options, args) = parser.parse_args(argv)
    word = _read_word(parser, options, args)

    if lyndon_scan.is_lyndon_word(word):
        utils.MSG("%s is a Lyndon word" % word)
        return 0
    utils.MSG("%s is not a Lyndon word" % word)
    return 1


def cmd_tree(argv, settings):
    "Print the left Lyndon tree of a Lyndon word."

    usage = "usage: %prog [lyndon_options] tree [options] WORD"
    description = "Builds the left Lyndon tree of the Lyndon word WORD."\
        " Leaves are the positions of WORD; internal nodes are numbered"\
        " from len(WORD) in creation order."
    parser = _parser(usage, description, render.TREE_FORMATS)
    parser.add_option("--dot", action="store_const", const=render.DOT,
        dest="format", help="Same as --format dot.")
    _add_count_option(parser)
    (options, args) = parser.parse_args(argv)
    word = _read_word(parser, options, args)

    budget = lyndon_scan.ComparisonBudget()
    tree = lyndon_tree.left_lyndon_tree(word, budget)
    utils.MSG(render.lyndon_tree(tree, options.format))
    _print_budget(parser, options, budget)


def cmd_forest(argv, settings):
    "Print the left Lyndon forest of a word."

    usage = "usage: %prog [lyndon_options] forest [options] WORD"
    description = "Builds one left Lyndon tree per factor of the Lyndon"\
        " factorization of WORD. Node ids are local to each tree."
    parser = _parser(usage, description, render.TREE_FORMATS)
    parser.add_option("--dot", action="store_const", const=render.DOT,
        dest="format", help="Same as --format dot.")
    _add_count_option(parser)
    (options, args) = parser.parse_args(argv)
    word = _read_word(parser, options, args)

    budget = lyndon_scan.ComparisonBudget()
    forest = lyndon_tree.left_lyndon_forest(word, budget)
    utils.MSG(render.lyndon_forest(forest, options.format))
    _print_budget(parser, options, budget)


def cmd_psp(argv, settings):
    "Print the prefix standard permutation of a Lyndon word."

    usage = "usage: %prog [lyndon_options] psp [options] WORD"
    description = "Sorts the proper non-empty prefixes of the Lyndon word"\
        " WORD by the infinite order and prints their end positions."
    parser = _parser(usage, description, render.TABLE_FORMATS)
    _add_count_option(parser)
    (options, args) = parser.parse_args(argv)
    word = _read_word(parser, options, args)

    budget = lyndon_scan.ComparisonBudget()
    psp = prefix_order.prefix_standard_permutation(word, budget)
    utils.MSG(render.permutation('psp', psp, options.format))
    _print_budget(parser, options, budget)


def cmd_rank(argv, settings):
    "Print the prefix rank table of a Lyndon word."

    usage = "usage: %prog [lyndon_options] rank [options] WORD"
    description = "Prints, for every proper prefix of the Lyndon word WORD,"\
        " its rank in the infinite order."
    parser = _parser(usage, description, render.TABLE_FORMATS)
    (options, args) = parser.parse_args(argv)
    word = _read_word(parser, options, args)

    rank = prefix_order.prefix_rank_table(word)
    utils.MSG(render.permutation('rank', rank, options.format))


def cmd_inverse_psp(argv, settings):
    "Recover a binary Lyndon word from its prefix standard permutation."

    usage = "usage: %prog [lyndon_options] inverse-psp [options] PERM"
    description = "PERM is a comma separated permutation of 0..n-2. Prints"\
        " the binary Lyndon word of length n whose prefix standard"\
        " permutation is PERM, or rejects PERM with exit status 1."
    parser = _parser(usage, description, (render.TEXT, render.JSON))
    (options, args) = parser.parse_args(argv)
    if len(args) > 1:
        parser.error("Too many arguments were provided. Aborting...")
    perm = utils.parse_permutation(
        utils.read_argument(args, options.filename))

    outcome = psp_inverse.inverse_psp_binary(perm)
    if options.format == render.JSON:
        utils.MSG(utils.compile_json({
            'accepted': outcome.accepted,
            'candidate': str(outcome.candidate),
            'candidate_psp': list(outcome.candidate_psp)
                if outcome.candidate_psp is not None else None,
        }, sort_keys=True))
    elif outcome.accepted:
        utils.MSG("%s" % outcome.word)
    else:
        utils.MSG(REJECT)
    return 0 if outcome.accepted else 1


def cmd_periods_from_psp(argv, settings):
    "Print the prefix periods of a Lyndon word given its PSP."

    usage = "usage: %prog [lyndon_options] periods-from-psp [options] PERM N"
    description = "PERM is the prefix standard permutation of a Lyndon word"\
        " of length N. Prints the smallest period of each of its prefixes."
    parser = _parser(usage, description, render.TABLE_FORMATS)
    parser.add_option("--prefix-ends", action="store_true",
        dest="prefix_ends", default=False, help="Print the end positions of"
        " the proper Lyndon prefixes instead.")
    (options, args) = parser.parse_args(argv)
    perm, n = _read_permutation_and_length(parser, options, args)

    per = psp_inverse.periods_from_psp(perm, n)
    if options.prefix_ends:
        ends = psp_inverse.lyndon_prefix_ends(perm)
        if options.format == render.JSON:
            utils.MSG(utils.compile_json({'prefix_ends': list(ends)}))
        else:
            utils.MSG(' '.join(str(j) for j in ends))
        return
    if options.format == render.TEXT:
        utils.MSG(' '.join(str(v) for v in per))
    elif options.format == render.TSV:
        utils.MSG('\n'.join(['j\tperiod[j]'] +
            ['%d\t%d' % item for item in enumerate(per)]))
    else:
        utils.MSG(utils.compile_json({'period': list(per)}))


def cmd_word_from_psp(argv, settings):
    "Print the smallest Lyndon word with a given PSP."

    usage = "usage: %prog [lyndon_options] word-from-psp [options] PERM N"
    description = "Prints the lexicographically smallest Lyndon word of"\
        " length N over a, b, c, ... whose prefix standard permutation is"\
        " PERM, or rejects PERM with exit status 1."
    parser = _parser(usage, description)
    (options, args) = parser.parse_args(argv)
    perm, n = _read_permutation_and_length(parser, options, args)

    try:
        word = psp_inverse.word_from_psp(perm, n)
    except NotPspError as e:
        logger.debug("%s Candidate: %s, its psp: %s." % (e, e.candidate,
            e.candidate_psp))
        utils.MSG(REJECT_ANY)
        return 1
    utils.MSG("%s" % word)


def cmd_check(argv, settings):
    "Run the oracle suites."

    usage = "usage: %prog [lyndon_options] check [options]"
    description = "Compares every linear construction with its brute-force"\
        " counterpart on all the words over SIGMA letters, all the Lyndon"\
        " words up to length MAXLEN and all the words up to length"\
        " WORD_MAXLEN, and prints the pass/fail counts of each suite."
    parser = OptionParser(usage=usage, description=description)
    parser.add_option("--sigma", action="store", type="int", dest="sigma",
        default=None, help="Alphabet size (default from [check] sigma).")
    parser.add_option("--maxlen", action="store", type="int", dest="maxlen",
        default=None, help="Longest Lyndon word (default from [check]"
        " maxlen).")
    parser.add_option("--word-maxlen", action="store", type="int",
        dest="word_maxlen", default=None, help="Longest arbitrary word"
        " (default from [check] word_maxlen).")
    parser.add_option("--suite", action="append", dest="suites",
        default=[], help="Run only this suite (repeatable).")
    (options, args) = parser.parse_args(argv)
    if args:
        parser.error("check takes no arguments.")

    sigma = _option_or_setting(options.sigma, settings, 'check', 'sigma')
    maxlen = _option_or_setting(options.maxlen, settings, 'check', 'maxlen')
    word_maxlen = _option_or_setting(options.word_maxlen, settings, 'check',
        'word_maxlen')
    if not 1 <= sigma <= 26 or maxlen < 1 or word_maxlen < 1:
        parser.error("sigma must be in 1..26 and the lengths positive.")
    suites = selfcheck.SUITES
    if options.suites:
        names = dict((s.__name__[len('suite_'):].replace('_', '-'), s)
                     for s in suites)
        unknown = [name for name in options.suites if name not in names]
        if unknown:
            parser.error("Unknown suite(s): %s. Available: %s." % (
                ', '.join(unknown), ', '.join(sorted(names))))
        suites = [names[name] for name in options.suites]

    workers = settings.getint('main', 'workers')
    logger.debug("check: sigma=%d maxlen=%d word_maxlen=%d workers=%d" % (
        sigma, maxlen, word_maxlen, workers))
    with utils.get_pool(workers) as pool:
        results = selfcheck.run_suites(sigma, maxlen, word_maxlen, pool,
            suites)
    for result in results:
        status = utils.color_text("ok", "GREEN") if result.ok else \
            utils.color_text("FAIL", "RED", bold=True)
        utils.MSG("%-18s passed %7d  failed %5d  %s" % (result.name,
            result.passed, result.failed, status))
        for example in result.examples:
            utils.MSG("    %s" % example)
    summary = selfcheck.total(results)
    utils.MSG("%-18s passed %7d  failed %5d" % ('total', summary.passed,
        summary.failed))
    return 0 if summary.ok else 1


def cmd_bench(argv, settings):
    "Check the linear counters and time the constructions."

    usage = "usage: %prog [lyndon_options] bench [options]"
    description = "Runs the constructions on random inputs of length N,"\
        " checks the comparison and node counters against their linear"\
        " bounds and prints the median timings."
    parser = OptionParser(usage=usage, description=description)
    parser.add_option("--n", action="store", type="int", dest="n",
        default=None, help="Input length (default from [bench] n).")
    parser.add_option("--trials", action="store", type="int", dest="trials",
        default=None, help="Random inputs per construction (default from"
        " [bench] trials).")
    parser.add_option("--seed", action="store", type="int", dest="seed",
        default=None, help="Random seed (default from [bench] seed).")
    parser.add_option("--scaling", action="store_true", dest="scaling",
        default=False, help="Also time inputs ten times longer.")
    (options, args) = parser.parse_args(argv)
    if args:
        parser.error("bench takes no arguments.")

    n = _option_or_setting(options.n, settings, 'bench', 'n')
    trials = _option_or_setting(options.trials, settings, 'bench', 'trials')
    seed = _option_or_setting(options.seed, settings, 'bench', 'seed')
    if n < 2 or trials < 1:
        parser.error("N must be at least 2 and TRIALS at least 1.")

    report = bench.run_bench(n, trials, seed, options.scaling)
    for line in report.lines():
        utils.MSG(line)
    for name, ok in report.checks.items():
        status = utils.color_text("ok", "GREEN") if ok else \
            utils.color_text("FAIL", "RED", bold=True)
        utils.MSG("%-34s %s" % (name, status))
    return 0 if report.ok else 1


def cmd_init(argv, settings):
    "Write a .lyndonrc with the default settings."

    usage = "usage: %prog [lyndon_options] init [options] [PATH]"
    description = "Writes a .lyndonrc holding the default settings in PATH,"\
        " or in the current working dir if no path is provided."
    parser = OptionParser(usage=usage, description=description)
    parser.add_option("--force", action="store_true", dest="force",
        default=False, help="Overwrite an existing .lyndonrc.")
    (options, args) = parser.parse_args(argv)

    if len(args) > 1:
        parser.error("Too many arguments were provided. Aborting...")
    path = args[0] if args else os.getcwd()
    rc_file = os.path.join(path, config.RC_NAME)
    if os.path.exists(rc_file) and not options.force:
        utils.ERRMSG("%s already exists, use --force to overwrite it."
            % rc_file)
        return 1
    logger.info("Creating %s..." % rc_file)
    config.write_skeleton(rc_file)
    logger.info("Done.")


def cmd_help(argv, settings):
    "List all available commands"

    usage = "usage: %prog help command"
    description = "Lists all available commands of the lyndon client. If a"\
        " command is specified, the help page of the specific command is"\
        " displayed instead."

    parser = OptionParser(usage=usage, description=description)

    (options, args) = parser.parse_args(argv)

    if len(args) > 1:
        parser.error("Multiple arguments received. Exiting...")

    # Get all commands
    fns = utils.discover_commands()

    # Print help for specific command
    if len(args) == 1:
        try:
            fns[args[0]](['--help'], settings)
        except KeyError:
            utils.ERRMSG("Command %s not found" % args[0])

    # the code below will only be executed if the KeyError exception is thrown
    # because in all other cases the function called with --help will exit
    # instead of return here
    utils.MSG("Linear-time algorithms on Lyndon words.\n")
    utils.MSG("Available commands are:")
    for key in sorted(fns):
        utils.MSG("  %-18s\t%s" % (key, fns[key].__doc__))

    utils.MSG("\nFor more information run %s command --help"
        % os.path.basename(sys.argv[0]))
