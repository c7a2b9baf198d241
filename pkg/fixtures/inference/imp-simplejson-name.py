import simplejson

print(simplejson.dumps(payload))
