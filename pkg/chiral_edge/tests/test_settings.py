#! /usr/bin/env python
# -*- coding: utf-8 -*-

# Author: The chiral-edge developers

import pytest

from ..exceptions import ConfigurationError
from ..settings import *


def test_run_config_defaults():
    """ Test RunConfig defaults
    """
    config = RunConfig()
    assert config.command == 'trace'
    assert config.n == [200]
    assert config.v == 0
    assert config.rel_tol == DEFAULT_REL_TOL
    assert config.workers == 1
    assert config.format == 'csv'
    assert config.out is None
    assert list(config.t_grid) == [-1.0, 0.0, 1.0, 2.0]


def test_run_config_dict():
    """ Test RunConfig dict-like access
    """
    config = RunConfig(n=[10, 20])
    assert config['n'] == [10, 20]
    config['v'] = 3
    assert config.v == 3
    pytest.raises(KeyError, config.__getitem__, 'nope')
    pytest.raises(KeyError, config.__setitem__, 'nope', 1)
    with pytest.raises(ConfigurationError):
        config['workers'] = 0
    with pytest.raises(ConfigurationError):
        config['replicates'] = 10


def test_run_config_validation():
    """ Test RunConfig rejects inconsistent values
    """
    pytest.raises(ConfigurationError, RunConfig, 'render')
    pytest.raises(ConfigurationError, RunConfig, n=[])
    pytest.raises(ConfigurationError, RunConfig, n=[0])
    pytest.raises(ConfigurationError, RunConfig, v=-1)
    pytest.raises(ConfigurationError, RunConfig, t_min=2.0, t_max=1.0)
    pytest.raises(ConfigurationError, RunConfig, t_step=0.0)
    pytest.raises(ConfigurationError, RunConfig, 'sample', replicates=5)
    pytest.raises(ConfigurationError, RunConfig, rel_tol=0.1)
    pytest.raises(ConfigurationError, RunConfig, rel_tol=1e-12)
    pytest.raises(ConfigurationError, RunConfig, format='xml')
    pytest.raises(ConfigurationError, RunConfig, alpha=[-1.0])
    pytest.raises(ConfigurationError, RunConfig, d_n=1.5)
    pytest.raises(ConfigurationError, RunConfig, q=0.0)


def test_run_config_json():
    """ Test RunConfig serialization including infinite alpha
    """
    config = RunConfig('ldp', n=[200, 500], alpha=[0.0, float('inf')],
                       seed=4, replicates=10, synthetic_sn=[1e4])
    text = config.to_json()
    assert '\n' not in text
    assert '"inf"' in text
    assert RunConfig.from_json(text) == config
    assert RunConfig.from_json(text).alpha[1] == float('inf')
    assert config != RunConfig('ldp')


def test_evaluation_budget(monkeypatch):
    """ Test the budget environment override
    """
    monkeypatch.delenv(BUDGET_ENV, raising=False)
    assert evaluation_budget() == DEFAULT_BUDGET
    monkeypatch.setenv(BUDGET_ENV, '5000')
    assert evaluation_budget() == 5000
    monkeypatch.setenv(BUDGET_ENV, 'many')
    pytest.raises(ConfigurationError, evaluation_budget)
    monkeypatch.setenv(BUDGET_ENV, '-3')
    pytest.raises(ConfigurationError, evaluation_budget)
