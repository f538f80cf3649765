import ASCM as package
