import requests

response = requests.get("http://example.com/")
print(response.status_code)
