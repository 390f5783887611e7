#! /usr/bin/env python
# -*- coding: utf-8 -*-

# Author: The chiral-edge developers

import math
import os

import pytest

from ..cli import *
from ..common import read
from ..deviations import rate_J
from ..special_functions import gumbel_cdf
from ..statistics import EcdfSummary, ks_distance


def _run(tmpdir, *argv):
    filename = str(tmpdir.join('out.csv'))
    code = main(list(argv) + ['--out', filename])
    return code, filename


def test_parser_defaults():
    """ Test subcommand defaults are filled in
    """
    args = build_parser().parse_args(['ldp'])
    config = config_from_args(args)
    assert config.n == [200, 500]
    assert config.alpha == [0.0, 1.0]
    assert config.t_min == 1.3
    args = build_parser().parse_args(['trace', '--n', '30', '--v', '2',
                                      '-v'])
    config = config_from_args(args)
    assert config.n == [30]
    assert config.v == 2
    assert args.verbose


def test_missing_command():
    """ Test running without a subcommand
    """
    assert main([]) == 2


def test_gauss_check(tmpdir):
    """ Test the gauss-check subcommand
    """
    code, filename = _run(tmpdir, 'gauss-check', '--n', '1000', '10000')
    assert code == 0
    result = read(filename)
    assert result.config.command == 'gauss-check'
    table = result.table('gauss')
    assert len(table) == 2
    for lhs, rhs, defect in zip(table.column('lhs'), table.column('rhs'),
                                table.column('defect')):
        assert defect == abs(lhs / rhs - 1.0)
        assert defect * math.log(1000) <= 5.0


def test_kernel_check(tmpdir):
    """ Test the kernel-check subcommand
    """
    code, filename = _run(tmpdir, 'kernel-check', '--n', '100')
    assert code == 0
    table = read(filename).table('kernel')
    assert table.column('v') == [0, 100]
    assert table.column('regime') == ['small_v', 'tau']
    assert max(table.column('sum_defect_log_n')) <= 10.0


def test_bes_synthetic(tmpdir):
    """ Test the bes subcommand on synthetic sizes
    """
    code, filename = _run(tmpdir, 'bes', '--synthetic-sn', '1e4', '1e8')
    assert code == 0
    result = read(filename)
    assert result.config.synthetic_sn == [1e4, 1e8]
    table = result.table('bes')
    assert table.column('s_n') == [1e4, 1e8]
    for row in table.rows:
        values = dict(zip(table.columns, row))
        assert values['ratio'] == values['be_measured_asymptotic'] \
            / values['be_leading_term']
        assert math.isnan(values['be_empirical'])


def test_ldp(tmpdir):
    """ Test the ldp subcommand including infinite alpha
    """
    code, filename = _run(tmpdir, 'ldp', '--n', '50', '--t-min', '2',
                          '--t-max', '2', '--alpha', '0', 'inf')
    assert code == 0
    result = read(filename)
    assert result.config.alpha == [0.0, float('inf')]
    table = result.table('ldp')
    assert len(table) == 2
    finite, infinite = [dict(zip(table.columns, row)) for row in table.rows]
    assert finite['rate_J'] == rate_J(0.0, 2.0)
    assert finite['defect'] == finite['empirical_ldp'] - finite['rate_J']
    assert infinite['v'] == -1
    assert math.isnan(infinite['empirical_ldp'])
    moderate = result.table('moderate')
    assert moderate.column('rate_moderate') == [16.0, 32.0]


def test_ldp_rejects_edge_thresholds(tmpdir):
    """ Test ldp refuses thresholds inside the edge
    """
    code, filename = _run(tmpdir, 'ldp', '--n', '20', '--t-min', '0.5',
                          '--t-max', '1.5')
    assert code == 2
    assert not os.path.exists(filename)


def test_output_directory_is_an_error(tmpdir):
    """ Test a directory given as --out exits with 2
    """
    code = main(['gauss-check', '--n', '1000', '--out', str(tmpdir)])
    assert code == 2
    assert tmpdir.check(dir=1)
    assert tmpdir.listdir() == []


def test_sample_requires_seed(tmpdir):
    """ Test sampling without a seed is a configuration error
    """
    code, filename = _run(tmpdir, 'sample', '--n', '10', '--replicates',
                          '5')
    assert code == 2
    assert not os.path.exists(filename)


def test_sample_deterministic(tmpdir):
    """ Test sample output depends on the seed only
    """
    outputs = []
    for workers in ('1', '1', '2'):
        filename = str(tmpdir.join('sample{}.csv'.format(len(outputs))))
        code = main(['sample', '--n', '10', '--replicates', '20', '--seed',
                     '7', '--workers', workers, '--out', filename])
        assert code == 0
        outputs.append(read(filename))
    sections = [output.data_section() for output in outputs]
    assert sections[0] == sections[1] == sections[2]
    result = outputs[0]
    x = result.table('replicates').column('x')
    summary = dict(zip(result.table('summary').columns,
                       result.table('summary').rows[0]))
    assert summary['ks_x'] == ks_distance(EcdfSummary.from_values(x),
                                          gumbel_cdf)
    assert summary['replicates'] == 20


def test_trace(tmpdir):
    """ Test the trace subcommand
    """
    code, filename = _run(tmpdir, 'trace', '--n', '20', '--t-min', '0',
                          '--t-max', '2', '--format', 'json')
    assert code == 0
    table = read(filename).table('trace')
    assert len(table) == 3
    cdf = table.column('fredholm_cdf')
    assert cdf[0] < cdf[1] < cdf[2]
    assert all(bound > 0 for bound in table.column('e2_bound'))
    assert table.column('status') == ['ok', 'ok', 'ok']
    for row in table.rows:
        values = dict(zip(table.columns, row))
        assert values['gumbel_cdf'] == float(gumbel_cdf(values['t']))
        assert math.isnan(values['mc_cdf'])


def test_stdout(capsys):
    """ Test output goes to stdout without --out
    """
    assert main(['gauss-check', '--n', '1000', '--format', 'json']) == 0
    captured = capsys.readouterr()
    assert captured.out.startswith('{')
    assert '"gauss"' in captured.out
