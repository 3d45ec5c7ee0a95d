"""Classification Plugin - axiom checks and the class hierarchy"""
