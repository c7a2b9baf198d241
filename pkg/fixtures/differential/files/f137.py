import bs4 as delta, json
q = "colon: import colon_decoy"
z = 'unbalanced ( [ { quote \' inside'
import lxml, pkg.sub.mod as gamma, kazoo
with open('/dev/null') as handle:
    import i3
