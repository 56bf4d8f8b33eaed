class TrafficLight(Module):
    def locals(self):
        self.state = 0
        self.count = 0
        self.pedestrian = False
    def outputs(self):
        self.sigG = False
        self.sigY = False
        self.sigR = False
    def init(self):
        self.state = 0
        self.count = 0
        self.pedestrian = False
        self.sigG = False
        self.sigY = False
        self.sigR = True
    def next(self):
        if self.state == 0:
            self.sigG = False
            self.sigY = False
            self.sigR = True
            self.count = 0
            if self.count < 60:
                self.count += 1
            else:
                self.state = 1
        elif self.state == 1:
            self.sigR = False
            self.sigY = False
            self.sigG = True
            if self.pedestrian:
                if self.count >= 60:
                    self.state = 2
                else:
                    self.state = 3
        elif self.state == 2:
            self.sigG = False
            self.sigY = True
            self.sigR = False
            if self.count < 5:
                self.count += 1
            else:
                self.state = 0
        elif self.state == 3:
            self.sigG = False
            self.sigY = False
            self.sigR = False
            if self.count < 60:
                self.count += 1
            else:
                self.state = 0
