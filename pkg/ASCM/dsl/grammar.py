'''
LR grammar of the SCM description format.

    scm NAME {
        exo NAME ~ bernoulli(P) | categorical(P, ...)
        var NAME = EXPR
        mixture NAME = tuple(NAME, ...)
        label NAME uses {NAME, ...} = EXPR | bayes(NAME)
    }
    query NAME on SCMNAME = P(LABEL = VALUE | do(NAME = VALUE, ...) ; given NAME = VALUE, ...)

Operator precedence, loosest first: or, xor, and, not, comparisons (< > =), + -, *.
'''

GRAMMAR = r'''
File: Blocks | EMPTY;
Blocks: Blocks Block | Block;
Block: ScmBlock | QueryBlock;

ScmBlock: 'scm' Name '{' Statements '}';
Statements: Statements Statement | Statement;
Statement: ExoDecl | VarDecl | MixtureDecl | LabelDecl;

ExoDecl: 'exo' Name '~' Dist;
Dist: 'bernoulli' '(' Prob ')' | 'categorical' '(' Probs ')';
Probs: Probs ',' Prob | Prob;
Prob: Integer '/' Integer | Decimal | Integer;

VarDecl: 'var' Name '=' Expr;
MixtureDecl: 'mixture' Name '=' 'tuple' '(' Names ')';
LabelDecl: 'label' Name 'uses' '{' NameList '}' '=' ClassifierBody;
ClassifierBody: 'bayes' '(' Name ')' | Expr;
NameList: Names | EMPTY;
Names: Names ',' Name | Name;

QueryBlock: 'query' Name 'on' Name '=' 'P' '(' Name '=' Integer '|' 'do' '(' Assignments ')' Given ')';
Given: ';' 'given' Assignments | EMPTY;
Assignments: Assignments ',' Assignment | Assignment;
Assignment: Name '=' Integer;

Expr: Expr 'or' XorExpr | XorExpr;
XorExpr: XorExpr 'xor' AndExpr | AndExpr;
AndExpr: AndExpr 'and' NotExpr | NotExpr;
NotExpr: 'not' NotExpr | Comparison;
Comparison: Sum '<' Sum | Sum '>' Sum | Sum '=' Sum | Sum;
Sum: Sum '+' Product | Sum '-' Product | Product;
Product: Product '*' Atom | Atom;
Atom: Integer
    | 'true'
    | 'false'
    | Name
    | 'ind' '(' Expr ')'
    | '(' Expr ')';

LAYOUT: LayoutItem | LAYOUT LayoutItem | EMPTY;
LayoutItem: WS | Comment;

terminals
Name: /[A-Za-z_][A-Za-z0-9_]*/;
Decimal: /\d+\.\d+/;
Integer: /\d+/;
WS: /\s+/;
Comment: /\#[^\n]*/;
KEYWORD: /\w+/;
'''
