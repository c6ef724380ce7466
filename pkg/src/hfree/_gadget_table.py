"""Gadget table: per-host cells with their marked pairs."""

# host id -> mode -> role -> {n, edges, marked}
# marked pairs are the allowed/distinguished (non)edges of the cell.
GADGET_TABLE = {
    'co-A1': {
        'delete': {
            's_component': {
                'n': 5,
                'edges': [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 4), (3, 4)],
                'marked': [(0, 4), (1, 2), (1, 3)],
            },
            'basic_unit': {
                'n': 5,
                'edges': [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 4), (3, 4)],
                'marked': [(0, 4), (1, 2)],
            },
            'enforcer': {
                'n': 5,
                'edges': [(0, 2), (0, 3), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
                'marked': [(2, 3)],
            },
        },
        'complete': {
            'enforcer': {
                'n': 5,
                'edges': [(0, 3), (1, 2), (1, 3), (1, 4), (2, 4), (3, 4)],
                'marked': [(0, 2)],
            },
        },
    },
    'co-A2': {
        'delete': {
            's_component': {
                'n': 6,
                'edges': [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 5), (3, 4), (3, 5), (4, 5)],
                'marked': [(1, 3), (2, 3), (4, 5)],
            },
            'basic_unit': {
                'n': 6,
                'edges': [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 5), (3, 4), (3, 5), (4, 5)],
                'marked': [(2, 3), (4, 5)],
            },
            'enforcer': {
                'n': 6,
                'edges': [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 5), (3, 4), (3, 5), (4, 5)],
                'marked': [(1, 2)],
            },
        },
        'complete': {
            's_component': {
                'n': 6,
                'edges': [(0, 2), (0, 3), (0, 4), (1, 4), (2, 5), (3, 4), (3, 5), (4, 5)],
                'marked': [(1, 3), (2, 3), (2, 4)],
            },
            'basic_unit': {
                'n': 6,
                'edges': [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 5), (3, 4), (3, 5)],
                'marked': [(2, 3), (4, 5)],
            },
            'enforcer': {
                'n': 6,
                'edges': [(0, 3), (0, 4), (1, 3), (1, 4), (2, 5), (3, 4), (3, 5), (4, 5)],
                'marked': [(0, 2)],
            },
        },
    },
    'A3': {
        'delete': {
            's_component': {
                'n': 6,
                'edges': [(0, 1), (0, 3), (0, 5), (1, 2), (1, 5), (2, 3), (3, 4), (4, 5)],
                'marked': [(0, 3), (1, 2), (2, 3)],
            },
            'basic_unit': {
                'n': 6,
                'edges': [(0, 1), (0, 3), (0, 5), (1, 2), (1, 5), (2, 3), (3, 4), (4, 5)],
                'marked': [(0, 3), (1, 2)],
            },
            'enforcer': {
                'n': 6,
                'edges': [(0, 1), (0, 3), (0, 5), (1, 2), (1, 5), (2, 3), (3, 4), (4, 5)],
                'marked': [(0, 3)],
            },
        },
        'complete': {
            'enforcer': {
                'n': 6,
                'edges': [(0, 1), (0, 5), (1, 5), (2, 3), (3, 4), (4, 5)],
                'marked': [(1, 2)],
            },
        },
    },
    'co-A3': {
        'delete': {
            's_component': {
                'n': 6,
                'edges': [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5)],
                'marked': [(1, 5), (2, 4), (2, 5)],
            },
            'basic_unit': {
                'n': 6,
                'edges': [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5)],
                'marked': [(1, 5), (2, 4)],
            },
            'enforcer': {
                'n': 6,
                'edges': [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5)],
                'marked': [(1, 5)],
            },
        },
    },
    'A4': {
        'delete': {
            's_component': {
                'n': 8,
                'edges': [(0, 1), (0, 2), (0, 4), (0, 6), (0, 7), (1, 2), (2, 3), (2, 4), (2, 6), (3, 4), (3, 7), (4, 5), (4, 6), (5, 6), (6, 7)],
                'marked': [(1, 2), (3, 7), (5, 6)],
            },
            'basic_unit': {
                'n': 8,
                'edges': [(0, 1), (0, 2), (0, 4), (0, 6), (0, 7), (1, 2), (2, 3), (2, 4), (2, 6), (3, 4), (3, 7), (4, 5), (4, 6), (5, 6), (6, 7)],
                'marked': [(3, 7), (5, 6)],
            },
            'enforcer': {
                'n': 8,
                'edges': [(0, 1), (0, 2), (0, 4), (0, 6), (0, 7), (1, 2), (2, 3), (2, 4), (2, 6), (3, 4), (3, 7), (4, 5), (4, 6), (5, 6), (6, 7)],
                'marked': [(3, 7)],
            },
        },
        'complete': {
            'enforcer': {
                'n': 8,
                'edges': [(0, 2), (0, 4), (0, 6), (0, 7), (1, 2), (2, 3), (2, 4), (2, 6), (3, 4), (4, 5), (4, 6), (5, 6), (6, 7)],
                'marked': [(0, 1)],
            },
        },
    },
    'A5': {
        'delete': {
            's_component': {
                'n': 9,
                'edges': [(0, 1), (0, 2), (0, 4), (0, 6), (0, 7), (0, 8), (1, 2), (2, 3), (2, 4), (2, 6), (2, 8), (3, 4), (3, 7), (4, 5), (4, 6), (4, 8), (5, 6), (6, 7), (6, 8)],
                'marked': [(1, 2), (3, 7), (5, 6)],
            },
            'basic_unit': {
                'n': 9,
                'edges': [(0, 1), (0, 2), (0, 4), (0, 6), (0, 7), (0, 8), (1, 2), (2, 3), (2, 4), (2, 6), (2, 8), (3, 4), (3, 7), (4, 5), (4, 6), (4, 8), (5, 6), (6, 7), (6, 8)],
                'marked': [(3, 7), (5, 6)],
            },
            'enforcer': {
                'n': 9,
                'edges': [(0, 1), (0, 2), (0, 4), (0, 6), (0, 7), (0, 8), (1, 2), (2, 3), (2, 4), (2, 6), (2, 8), (3, 4), (3, 7), (4, 5), (4, 6), (4, 8), (5, 6), (6, 7), (6, 8)],
                'marked': [(3, 7)],
            },
        },
        'complete': {
            'enforcer': {
                'n': 9,
                'edges': [(0, 2), (0, 4), (0, 6), (0, 7), (0, 8), (1, 2), (2, 3), (2, 4), (2, 6), (2, 8), (3, 4), (4, 5), (4, 6), (4, 8), (5, 6), (6, 7), (6, 8)],
                'marked': [(0, 1)],
            },
        },
    },
    'co-A6': {
        'complete': {
            'enforcer': {
                'n': 6,
                'edges': [(0, 2), (0, 3), (0, 4), (1, 3), (2, 3), (2, 4), (2, 5), (3, 5)],
                'marked': [(1, 4)],
            },
        },
    },
    'co-A7': {
        'delete': {
            's_component': {
                'n': 6,
                'edges': [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5)],
                'marked': [(0, 3), (1, 3), (3, 5)],
            },
            'basic_unit': {
                'n': 6,
                'edges': [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5)],
                'marked': [(0, 3), (2, 5)],
            },
        },
        'complete': {
            's_component': {
                'n': 6,
                'edges': [(0, 2), (0, 4), (1, 4), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5)],
                'marked': [(0, 1), (0, 5), (1, 3)],
            },
            'basic_unit': {
                'n': 6,
                'edges': [(0, 2), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (3, 5)],
                'marked': [(0, 3), (2, 5)],
            },
            'enforcer': {
                'n': 6,
                'edges': [(0, 2), (0, 4), (1, 4), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5)],
                'marked': [(1, 3)],
            },
        },
    },
    'co-A8': {
        'complete': {
            's_component': {
                'n': 6,
                'edges': [(0, 2), (0, 4), (1, 4), (1, 5), (2, 3), (2, 4), (3, 4)],
                'marked': [(0, 3), (2, 5), (3, 5)],
            },
            'basic_unit': {
                'n': 6,
                'edges': [(0, 2), (0, 4), (1, 4), (1, 5), (2, 3), (2, 4), (3, 4)],
                'marked': [(0, 3), (2, 5)],
            },
            'enforcer': {
                'n': 6,
                'edges': [(0, 2), (0, 4), (1, 4), (2, 3), (2, 4), (2, 5), (3, 4)],
                'marked': [(1, 5)],
            },
        },
    },
    'co-A9': {
        'delete': {
            's_component': {
                'n': 7,
                'edges': [(0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6)],
                'marked': [(1, 2), (3, 6), (4, 6)],
            },
            'basic_unit': {
                'n': 7,
                'edges': [(0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6)],
                'marked': [(1, 2), (3, 6)],
            },
        },
        'complete': {
            's_component': {
                'n': 7,
                'edges': [(0, 3), (0, 4), (0, 5), (1, 3), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5), (3, 6), (4, 5)],
                'marked': [(1, 2), (1, 6), (4, 6)],
            },
            'basic_unit': {
                'n': 7,
                'edges': [(0, 3), (0, 4), (0, 5), (1, 3), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5), (4, 6)],
                'marked': [(1, 2), (3, 6)],
            },
            'enforcer': {
                'n': 7,
                'edges': [(0, 3), (0, 4), (0, 5), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6)],
                'marked': [(1, 3)],
            },
        },
    },
    'co-B1': {
        'complete': {
            's_component': {
                'n': 6,
                'edges': [(0, 1), (0, 2), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (2, 4), (2, 5), (4, 5)],
                'marked': [(2, 3), (3, 4), (3, 5)],
            },
            'basic_unit': {
                'n': 6,
                'edges': [(0, 1), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (2, 4), (2, 5), (3, 5), (4, 5)],
                'marked': [(0, 2), (3, 4)],
            },
            'enforcer': {
                'n': 6,
                'edges': [(0, 1), (0, 2), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (2, 4), (2, 5), (4, 5)],
                'marked': [(3, 5)],
            },
        },
    },
    'co-B2': {
        'complete': {
            's_component': {
                'n': 7,
                'edges': [(0, 1), (0, 3), (0, 4), (0, 5), (0, 6), (1, 2), (1, 5), (1, 6), (2, 5), (2, 6), (3, 6), (5, 6)],
                'marked': [(1, 4), (2, 3), (3, 4)],
            },
            'basic_unit': {
                'n': 7,
                'edges': [(0, 1), (0, 3), (0, 4), (0, 5), (0, 6), (1, 2), (1, 5), (1, 6), (2, 5), (2, 6), (3, 6), (5, 6)],
                'marked': [(1, 4), (2, 3)],
            },
            'enforcer': {
                'n': 7,
                'edges': [(0, 1), (0, 3), (0, 4), (0, 5), (0, 6), (1, 2), (1, 5), (1, 6), (2, 5), (2, 6), (3, 6), (5, 6)],
                'marked': [(1, 4)],
            },
        },
    },
    'co-B3': {
        'complete': {
            's_component': {
                'n': 8,
                'edges': [(0, 1), (0, 3), (0, 4), (0, 5), (0, 7), (1, 2), (1, 4), (1, 5), (1, 7), (2, 4), (2, 7), (3, 7), (4, 6), (4, 7)],
                'marked': [(2, 6), (3, 5), (3, 6)],
            },
            'basic_unit': {
                'n': 8,
                'edges': [(0, 1), (0, 3), (0, 4), (0, 5), (0, 7), (1, 2), (1, 4), (1, 5), (1, 7), (2, 4), (2, 7), (3, 7), (4, 6), (4, 7)],
                'marked': [(2, 6), (3, 5)],
            },
            'enforcer': {
                'n': 8,
                'edges': [(0, 1), (0, 3), (0, 4), (0, 5), (0, 7), (1, 2), (1, 4), (1, 5), (1, 7), (2, 4), (2, 7), (3, 7), (4, 6), (4, 7)],
                'marked': [(2, 6)],
            },
        },
    },
}
