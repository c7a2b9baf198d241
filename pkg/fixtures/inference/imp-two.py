import requests
import simplejson

print("ok")
