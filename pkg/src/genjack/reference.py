"""Published low-degree expansions J = sum c_mu s_mu, transcribed verbatim.

Keys are multipartition strings; values list (mu, coefficient) pairs in the
order they were printed.  Coefficients use the syntax of ``ring.parse``.
"""

EXPANSIONS = {
    1: {
        "[1]": [("[1]", "t2")],
        "[1,1]": [("[1,1]", "2*t2^2")],
        "[2]": [("[1,1]", "(t1+t2)*t2"), ("[2]", "-(t1-t2)*t2")],
        "[1,1,1]": [("[1,1,1]", "6*t2^3")],
        "[2,1]": [("[1,1,1]", "2*t2^2*(t1+t2)"), ("[2,1]", "-t2^2*(t1-2*t2)")],
        "[3]": [
            ("[1,1,1]", "t2*(2*t1+t2)*(t1+t2)"),
            ("[2,1]", "-2*t2*(t1+t2)*(t1-t2)"),
            ("[3]", "t2*(t1-t2)*(2*t1-t2)"),
        ],
    },
    2: {
        "[],[1]": [("[],[1]", "(t1+t2-u1+u2)*t2")],
        "[1],[]": [("[],[1]", "(t1+t2)*t2"), ("[1],[]", "-t2*(u1-u2)")],
        "[],[1,1]": [("[],[1,1]", "2*t2^2*(t1+t2-u1+u2)*(t1+2*t2-u1+u2)")],
        "[],[2]": [
            ("[],[1,1]", "t2*(2*t1+t2-u1+u2)*(t1+t2-u1+u2)*(t1+t2)"),
            ("[],[2]", "-t2*(t1-t2)*(2*t1+t2-u1+u2)*(t1+t2-u1+u2)"),
        ],
        "[1],[1]": [
            ("[],[1,1]", "(2*t1+t2-u1+u2)*t2^2*(t1+t2)"),
            ("[],[2]", "t2^2*(t2-u1+u2)*(t1+t2)"),
            ("[1],[1]", "t2^2*(t2-u1+u2)*(u2-u1+t1)"),
        ],
        "[1,1],[]": [
            ("[],[1,1]", "2*t2^2*(t1+t2)*(t1+2*t2-u2+u1)"),
            ("[],[2]", "-2*t2^2*(t1+t2)*(u1-u2)"),
            ("[1],[1]", "-2*t2^2*(t1+t2)*(u1-u2)"),
            ("[1,1],[]", "2*t2^2*(u1-u2)*(t2-u2+u1)"),
        ],
        "[2],[]": [
            ("[],[1,1]", "(t1+t2)*t2*(2*t1*u1-2*t1*u2+2*t1^2+3*t2*t1+t2^2)"),
            ("[],[2]", "-(t1+t2)*t2*(2*t1*u1-2*t1*u2+2*t1^2-t2*t1-t2^2)"),
            ("[1],[1]", "-2*t2^2*(t1+t2)*(u1-u2)"),
            ("[1,1],[]", "t2*(t1+t2)*(u1-u2+t1)*(u1-u2)"),
            ("[2],[]", "-t2*(t1-t2)*(u1-u2+t1)*(u1-u2)"),
        ],
    },
    3: {
        "[],[],[1]": [("[],[],[1]", "t2*(t1+t2-u1+u3)*(t1+t2-u2+u3)")],
        "[],[1],[]": [
            ("[],[],[1]", "t2*(t1+t2)*(t1+t2-u1+u2)"),
            ("[],[1],[]", "-t2*(t1+t2-u1+u2)*(u2-u3)"),
        ],
        "[1],[],[]": [
            ("[],[],[1]", "(t1+t2)*(u1-u2+t1+t2)*t2"),
            ("[],[1],[]", "-t2*(t1+t2)*(u1-u3)"),
            ("[1],[],[]", "t2*(u1-u2)*(u1-u3)"),
        ],
    },
}
