# -*- coding: utf-8 -*-
# snapshottest: v1 - https://goo.gl/zC4yUc
from __future__ import unicode_literals

from snapshottest import Snapshot


snapshots = Snapshot()

snapshots['test_table_json 1'] = [
    {
        'family': 'Sp1',
        'field': '(2*z)*d/dz + (th1)*d/dth1',
        'hamiltonian': '2*z',
        'i': 1,
        'j': 1
    },
    {
        'family': 'Sp2',
        'field': '(z^2)*d/dz + (z*th1)*d/dth1',
        'hamiltonian': 'z^2',
        'i': 1,
        'j': 1
    },
    {
        'family': 'Sp3',
        'field': '(-1)*d/dz',
        'hamiltonian': '-1',
        'i': 1,
        'j': 1
    },
    {
        'family': 'OddA',
        'field': '(th1)*d/dz + (1)*d/dth1',
        'hamiltonian': '2*th1',
        'i': 2,
        'j': 1
    },
    {
        'family': 'OddB',
        'field': '(-z*th1)*d/dz + (-z)*d/dth1',
        'hamiltonian': '-2*z*th1',
        'i': 1,
        'j': 1
    }
]

snapshots['test_basis_json 1'] = [
    {
        'family': 'Sp1',
        'i': 1,
        'j': 1,
        'matrix': {
            'entries': [
                [
                    '1/1',
                    '0/1',
                    '0/1'
                ],
                [
                    '0/1',
                    '-1/1',
                    '0/1'
                ],
                [
                    '0/1',
                    '0/1',
                    '0/1'
                ]
            ],
            'l': 0,
            'n': 1
        }
    },
    {
        'family': 'Sp2',
        'i': 1,
        'j': 1,
        'matrix': {
            'entries': [
                [
                    '0/1',
                    '1/1',
                    '0/1'
                ],
                [
                    '0/1',
                    '0/1',
                    '0/1'
                ],
                [
                    '0/1',
                    '0/1',
                    '0/1'
                ]
            ],
            'l': 0,
            'n': 1
        }
    },
    {
        'family': 'Sp3',
        'i': 1,
        'j': 1,
        'matrix': {
            'entries': [
                [
                    '0/1',
                    '0/1',
                    '0/1'
                ],
                [
                    '1/1',
                    '0/1',
                    '0/1'
                ],
                [
                    '0/1',
                    '0/1',
                    '0/1'
                ]
            ],
            'l': 0,
            'n': 1
        }
    },
    {
        'family': 'OddA',
        'i': 2,
        'j': 1,
        'matrix': {
            'entries': [
                [
                    '0/1',
                    '0/1',
                    '0/1'
                ],
                [
                    '0/1',
                    '0/1',
                    '1/1'
                ],
                [
                    '-1/1',
                    '0/1',
                    '0/1'
                ]
            ],
            'l': 0,
            'n': 1
        }
    },
    {
        'family': 'OddB',
        'i': 1,
        'j': 1,
        'matrix': {
            'entries': [
                [
                    '0/1',
                    '0/1',
                    '1/1'
                ],
                [
                    '0/1',
                    '0/1',
                    '0/1'
                ],
                [
                    '0/1',
                    '1/1',
                    '0/1'
                ]
            ],
            'l': 0,
            'n': 1
        }
    }
]
