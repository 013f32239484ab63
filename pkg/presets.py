"""
Presets for graphs, matching rules and theorem suites
Each graph preset carries the run settings its homology table is usually computed with
"""

# Graph presets - named runs for `homology --preset`
GRAPH_PRESETS = {
    "rook44": {
        "name": "4x4 Rook Graph",
        "description": "Cayley graph of Z/4 x Z/4. Same magnitude as Shrikhande, diagonal.",
        "graph": "rook44",
        "lmax": 4,
        "method": "naive"
    },
    "shrikhande": {
        "name": "Shrikhande Graph",
        "description": "Same magnitude as the rook graph, but MH_{3,4} has rank 144.",
        "graph": "shrikhande",
        "lmax": 4,
        "method": "naive"
    },
    "dodecahedron": {
        "name": "Dodecahedral Graph",
        "description": "Same magnitude as Desargues; MH_{2,4} has rank 60.",
        "graph": "dodecahedron",
        "lmax": 4,
        "method": "naive"
    },
    "desargues": {
        "name": "Desargues Graph",
        "description": "Same magnitude as the dodecahedron; MH_{3,4} has rank 300.",
        "graph": "desargues",
        "lmax": 4,
        "method": "naive"
    },
    "icosahedron": {
        "name": "Icosahedral Graph",
        "description": "Diagonal, but not pawful. Reduced with the icosahedral rule.",
        "graph": "icosahedron",
        "lmax": 4,
        "method": "morse:icosa"
    },
    "c5": {
        "name": "Pentagon",
        "description": "Odd cycle. Ranks follow the odd cycle recurrence.",
        "graph": "cycle:5",
        "lmax": 5,
        "method": "morse:odd-cycle"
    },
    "c6": {
        "name": "Hexagon",
        "description": "Even cycle. Reduced complex has zero differentials.",
        "graph": "cycle:6",
        "lmax": 5,
        "method": "morse:even-cycle"
    },
    "custom": {
        "name": "Custom",
        "description": "Graph, lmax and method given on the command line.",
    }
}

# Matching rules - the graphs each rule is checked on by `verify-theorems`
RULE_PRESETS = {
    "tree": {
        "name": "Tree Rule",
        "description": "Delete a geodesic interior vertex, else insert the first step of a long jump.",
        "targets": ["path:4", "star:3", "tree:0-1,1-2,1-3,3-4"]
    },
    "geopto": {
        "name": "Geodetic Ptolemaic Rule",
        "description": "The tree rule on block graphs, where geodesics are still unique.",
        "targets": ["block3", "complete:4", "path:4"]
    },
    "pawful": {
        "name": "Pawful Rule",
        "description": "Diameter-2 graphs where every (2,2,1) triple has a common neighbour.",
        "targets": ["complement(cycle:6)", "complement(cycle:7)", "join(path:2,path:3)", "fan:3"]
    },
    "icosa": {
        "name": "Icosahedral Rule",
        "description": "Twelve cases built from the orientation of the icosahedron.",
        "targets": ["icosahedron"]
    },
    "icosa-mirror": {
        "name": "Icosahedral Rule (mirrored)",
        "description": "The icosahedral rule with left and right exchanged.",
        "targets": ["icosahedron"]
    },
    "odd-cycle": {
        "name": "Odd Cycle Rule",
        "description": "Valid and acyclic, not diagonal. Unmatched counts follow t_odd.",
        "targets": ["cycle:5", "cycle:7"]
    },
    "even-cycle": {
        "name": "Even Cycle Rule",
        "description": "Valid and acyclic, not diagonal. Reduced differentials vanish.",
        "targets": ["cycle:6", "cycle:8"]
    },
    "nonmorse": {
        "name": "Non-Morse Example",
        "description": "A valid rule whose prefix matching has a zig-zag cycle.",
        "targets": ["nonmorse"]
    }
}

# Theorem suites - selectors of `verify-theorems`
THEOREM_SUITES = {
    "trees": {
        "name": "Trees",
        "description": "Tree rule on every tree with at most 7 vertices.",
        "lmax": 4
    },
    "pawful": {
        "name": "Pawful Graphs",
        "description": "Pawful rule on complements of cycles, joins and the fan.",
        "lmax": 4
    },
    "icosa": {
        "name": "Icosahedron",
        "description": "Choice tables, both chiralities, diagonality.",
        "lmax": 4
    },
    "odd": {
        "name": "Odd Cycles",
        "description": "C_5 and C_7 against t_odd, torsion-free.",
        "lmax": 5
    },
    "even": {
        "name": "Even Cycles",
        "description": "C_6 and C_8 against t_even, torsion-free, zero reduced differentials.",
        "lmax": 5
    },
    "geopto": {
        "name": "Geodetic Ptolemaic Graphs",
        "description": "Block graphs through the geodetic ptolemaic rule; C_4 is rejected.",
        "lmax": 4
    },
    "appendixA": {
        "name": "Equal Magnitude, Different Homology",
        "description": "Rook vs Shrikhande and dodecahedron vs Desargues.",
        "lmax": 4
    },
    "ptolemaic": {
        "name": "Ptolemaic Characterizations",
        "description": "Equivalent characterizations on all connected graphs with at most 7 vertices.",
        "lmax": 0
    },
    "nonmorse": {
        "name": "Non-Morse Matching",
        "description": "The six-vertex example has the expected eight-sequence zig-zag cycle.",
        "lmax": 3
    },
    "oracle": {
        "name": "Reduction Oracle",
        "description": "Reduced and naive homology agree on random graphs and every rule.",
        "lmax": 3
    },
    "euler": {
        "name": "Categorification",
        "description": "Alternating rank sums equal magnitude coefficients.",
        "lmax": 4
    }
}
